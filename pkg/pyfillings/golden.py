"""
Golden descriptor lists
=======================

The expected fillings of the tetrahedral, octahedral and icosahedral
singularities are stored in ``data/golden.json``.

``specific``
    A list of descriptor objects per singularity id.

``generic``
    Rows valid for every ``b >= b_min`` in a residue class. The string has
    ``k = b + k_offset`` curves: ``tail`` preceded by -2 curves. An
    attachment ``[a, offset]`` sits on the curve of index ``k + offset``.

Specific rows take precedence over generic ones.
"""
import io
import json

from .catalog import parse_singularity, polyhedral_families
from .errors import DomainError
from .fillings.descriptor import FillingDescriptor
from .parameters import family_periods, golden_fn


def load(path=None):
    """Load a golden file, the packaged one by default"""
    if path is None:
        path = golden_fn
    with io.open(path, "r", encoding="utf8") as f:
        return json.load(f)


def _generic_rows(data, s):
    return [
        row
        for row in data["generic"]
        if row["family"] == s.family and row["residue"] == s.residue and s.b >= row["b_min"]
    ]


def _instantiate(row, s):
    k = s.b + row["k_offset"]
    string = [-2] * (k - len(row["tail"])) + list(row["tail"])
    attachments = [(a, k + offset) for a, offset in row["attachments"]]
    return FillingDescriptor(
        s, row["dd"], string, attachments=attachments, case=row["case"], base=row["base"]
    )


def expected_descriptors(s, data=None):
    """
    The expected descriptors of a singularity.

    Parameters
    ----------
    s: SingularityId or str
        A tetrahedral, octahedral or icosahedral singularity
    data: dict, optional
        The content of a golden file, the packaged one by default

    Returns
    -------
    list of FillingDescriptor
        Sorted
    """
    s = parse_singularity(s)
    if data is None:
        data = load()

    rows = data["specific"].get(str(s))
    if rows is not None:
        return sorted(FillingDescriptor.from_json(row, singularity=s) for row in rows)

    generic = _generic_rows(data, s)
    if len(generic) == 0:
        raise DomainError("No golden data for {}".format(s))
    return sorted(_instantiate(row, s) for row in generic)


def golden_ids(b_max=None, data=None):
    """
    The singularities covered by a golden file.

    Parameters
    ----------
    b_max: int, optional
        Largest ``b`` to list. By default every generic row is instantiated
        once, at its ``b_min``
    data: dict, optional
        The content of a golden file, the packaged one by default

    Returns
    -------
    list of SingularityId
        Sorted by family, then ``m``
    """
    if data is None:
        data = load()

    ids = set(parse_singularity(key) for key in data["specific"])

    for row in data["generic"]:
        top = row["b_min"] if b_max is None else b_max
        for b in range(row["b_min"], top + 1):
            m = family_periods[row["family"]] * (b - 2) + row["residue"]
            ids.add(parse_singularity("{}:{}".format(row["family"], m)))

    if b_max is not None:
        ids = set(s for s in ids if s.b <= b_max)

    order = {f: i for i, f in enumerate(polyhedral_families)}
    return sorted(ids, key=lambda s: (order[s.family], s.m))


def regold(results, path=None):
    """
    Overwrite the specific rows of a golden file.

    Parameters
    ----------
    results: dict
        Lists of descriptors keyed by singularity id
    path: str, optional
        The golden file, the packaged one by default
    """
    if path is None:
        path = golden_fn
    data = load(path)

    for key, descriptors in results.items():
        s = parse_singularity(key)
        if s.family not in polyhedral_families:
            raise DomainError("Golden rows are only kept for T, O and I singularities")
        rows = []
        for d in sorted(descriptors):
            row = d.to_json()
            del row["singularity"]
            rows.append(row)
        data["specific"][str(s)] = rows

    with io.open(path, "w", encoding="utf8") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
