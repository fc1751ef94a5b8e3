"""File-based manifold records for the command-line front end.

A record is a JSON object with a `name`, a `dim` (positive multiple of 4),
and at least one of:

* "pontryagin": map from partition keys like "[2,2,1,1]" to integers,
  covering every partition of dim/4;
* "kappa": four integers, allowed only at dim = 24.

A records file holds either a single record object or a list of them.
"""

import json
from dataclasses import dataclass
from importlib import resources

from .partitions import PontryaginVector


@dataclass(frozen=True)
class ManifoldRecord:
    name: str
    dim: int
    pontryagin: object = None  # PontryaginVector or None
    kappa: object = None       # tuple of 4 ints or None

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ValueError("a manifold record must be a JSON object")
        name = data.get("name", "")
        if not isinstance(name, str):
            raise ValueError("record name must be a string")
        dim = data.get("dim")
        if not isinstance(dim, int) or dim <= 0 or dim % 4 != 0:
            raise ValueError("record dim must be a positive multiple of 4 (got %r)" % (dim,))
        known = {"name", "dim", "pontryagin", "kappa"}
        unknown = set(data) - known
        if unknown:
            raise ValueError("unknown record fields: %s" % sorted(unknown))

        pontryagin = None
        if data.get("pontryagin") is not None:
            if not isinstance(data["pontryagin"], dict):
                raise ValueError("pontryagin must be an object of partition keys")
            pontryagin = PontryaginVector.from_string_keys(dim, data["pontryagin"])

        kappa = None
        if data.get("kappa") is not None:
            raw = data["kappa"]
            if dim != 24:
                raise ValueError("kappa data is only meaningful at dim = 24")
            if (not isinstance(raw, list) or len(raw) != 4
                    or any(not isinstance(v, int) or isinstance(v, bool) for v in raw)):
                raise ValueError("kappa must be a list of 4 integers")
            kappa = tuple(raw)

        if pontryagin is None and kappa is None:
            raise ValueError("record %r needs pontryagin numbers or a kappa quadruple" % name)
        return cls(name=name, dim=dim, pontryagin=pontryagin, kappa=kappa)


def load_records(path):
    """Load one record or a list of records from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return [ManifoldRecord.from_dict(item) for item in data]
    return [ManifoldRecord.from_dict(data)]


def load_catalog():
    """The bundled catalog: the four kappa-basis classes and the zero class."""
    text = resources.files("ellcob").joinpath("data/catalog.json").read_text("utf-8")
    return [ManifoldRecord.from_dict(item) for item in json.loads(text)]
