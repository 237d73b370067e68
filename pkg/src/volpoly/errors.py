"""Exception types raised by volpoly."""


class VolpolyError(ValueError):
    """Base class for input errors."""


class DimensionError(VolpolyError):
    """Operands have incompatible sizes or degrees."""


class CapError(VolpolyError):
    """A desk-scale cap (dimension, vertex count, ground set size) was exceeded."""

    def __init__(self, cap: str, limit, value):
        self.cap = cap
        self.limit = limit
        self.value = value
        super().__init__(f"{cap} cap exceeded: {value} > {limit}")


class AxiomError(VolpolyError):
    """A polymatroid rank axiom fails; carries the axiom name and witness sets."""

    def __init__(self, axiom: str, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")
