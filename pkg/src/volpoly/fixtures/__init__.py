"""Reference inputs shipped with the package."""

import json
from importlib import resources


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def load(name: str):
    with resources.files(__name__).joinpath(f"{name}.json").open() as fh:
        return json.load(fh)
