"""Builders for separating union-closed families.

Three closed forms, plus a general builder that hits any feasible size:

* staircase(n): the n-1 suffix sets {n}, {n-1,n}, ..., {2..n}; the minimum
  weight separating union-closed family on [n].
* plateau(n): all n sets [n] minus a point, plus [n] itself; weight n**2.
* powerset(n): every subset of [n].
* intermediate(n, m): a separating union-closed family of size exactly m for
  any m between n-1 and 2**n, built from a small union of anchored subcubes
  below a chain of prefixes [b+2], ..., [n].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import min_weight_upper
from .errors import InvalidInputError, InvariantError
from .family import SetFamily

KINDS = ("staircase", "plateau", "powerset", "intermediate")


@dataclass(frozen=True)
class IntermediateTrace:
    """How intermediate(n, m) arrived at its family.

    case is one of "powerset", "staircase", "staircase_empty",
    "staircase_singleton", or "general".  The remaining fields are only
    populated in the general case: b is the largest subcube dimension,
    expansion lists the binary expansion exponents of m - n + b + 1
    (descending), technical records whether the leading exponent equals b,
    and base_size + top_size = m.
    """

    case: str
    b: Optional[int] = None
    expansion: Optional[tuple[int, ...]] = None
    technical: Optional[bool] = None
    base_size: Optional[int] = None
    top_size: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "b": self.b,
            "expansion": list(self.expansion) if self.expansion is not None else None,
            "technical": self.technical,
            "base_size": self.base_size,
            "top_size": self.top_size,
        }


def staircase(n: int) -> SetFamily:
    """Suffix chain {n}, {n-1,n}, ..., {2,...,n}; empty for n = 1."""
    if n < 1:
        raise InvalidInputError("staircase needs n >= 1")
    full = (1 << n) - 1
    masks = [full ^ ((1 << k) - 1) for k in range(n - 1, 0, -1)]
    return SetFamily(n, tuple(masks))


def plateau(n: int) -> SetFamily:
    """The n co-points of [n] plus [n] itself.  For n = 1 this degenerates
    to the two-member family {{}, {1}}."""
    if n < 1:
        raise InvalidInputError("plateau needs n >= 1")
    full = (1 << n) - 1
    masks = [full ^ (1 << i) for i in range(n)] + [full]
    return SetFamily(n, tuple(masks))


def powerset(n: int) -> SetFamily:
    if not 1 <= n <= 20:
        raise InvalidInputError("powerset supported for 1 <= n <= 20")
    return SetFamily(n, tuple(range(1 << n)))


def _anchored_cube(anchor: int, dim: int) -> list[int]:
    # All subsets of [dim], each with the anchor element added.
    a = 1 << (anchor - 1)
    return [x | a for x in range(1 << dim)]


def intermediate(n: int, m: int) -> tuple[SetFamily, IntermediateTrace]:
    """Separating union-closed family of size exactly m on [n].

    Requires n - 1 <= m <= 2**n.  Sizes up to n + 1 come from the staircase
    with at most two extra sets; size 2**n is the powerset.  In between, pick
    the unique b with 2**b - b <= m - n < 2**(b+1) - (b+1), expand
    e = m - n + b + 1 in binary, and take the disjoint union of anchored
    subcubes of those dimensions inside [b+1], topped by the prefix chain
    [b+2], ..., [n].  Every output is re-checked against the full oracle
    suite before it is returned.
    """
    if n < 1:
        raise InvalidInputError("domain size must be positive")
    if not n - 1 <= m <= (1 << n):
        raise InvalidInputError(
            f"no separating union-closed family of size {m} exists on [{n}]: "
            f"need n - 1 <= m <= 2**n"
        )

    if m == (1 << n):
        family, trace = powerset(n), IntermediateTrace("powerset")
    elif m == n - 1:
        family, trace = staircase(n), IntermediateTrace("staircase")
    elif m == n:
        family = SetFamily(n, (0,) + staircase(n).masks)
        trace = IntermediateTrace("staircase_empty")
    elif m == n + 1:
        if n == 2:
            # {{}, {2}, {1,2}}: the staircase plus {1} is not union-closed
            # on two elements, so close it upward instead.
            family = SetFamily(2, (0, 2, 3))
        else:
            extra = 1 << (n - 2)  # the singleton {n-1}
            family = SetFamily(n, (0, extra) + staircase(n).masks)
        trace = IntermediateTrace("staircase_singleton")
    else:
        family, trace = _general_case(n, m)

    _check_output(family, n, m)
    return family, trace


def _general_case(n: int, m: int) -> tuple[SetFamily, IntermediateTrace]:
    gap = m - n
    b = 1
    while not ((1 << b) - b <= gap < (1 << (b + 1)) - (b + 1)):
        b += 1
    e = gap + b + 1
    expansion = tuple(i for i in range(e.bit_length() - 1, -1, -1) if (e >> i) & 1)
    technical = expansion[0] == b

    if not technical:
        # e == 2**(b+1); take the whole powerset of [b+1].
        base = list(range(1 << (b + 1)))
    else:
        base = _anchored_cube(b + 1, expansion[0])
        anchor = expansion[0]
        for dim in expansion[1:]:
            cube = _anchored_cube(anchor, dim)
            if any(x & ~((1 << (b + 1)) - 1) for x in cube):
                raise InvariantError("subcube escaped the base domain")
            base.extend(cube)
            anchor = dim
    if len(set(base)) != len(base):
        raise InvariantError("subcubes overlap")
    if len(base) != e:
        raise InvariantError(f"base has {len(base)} sets, wanted {e}")
    if n < b + 1:
        raise InvariantError("base domain exceeds the requested domain")

    if len(base) <= 1 << 16:
        base_family = SetFamily(max(b + 1, 1), tuple(base))
        if not base_family.is_union_closed():
            raise InvariantError("base is not union-closed")
        if not base_family.is_separating():
            raise InvariantError("base is not separating")

    top = [(1 << k) - 1 for k in range(b + 2, n + 1)]
    family = SetFamily(n, tuple(base) + tuple(top))
    trace = IntermediateTrace(
        "general",
        b=b,
        expansion=expansion,
        technical=technical,
        base_size=len(base),
        top_size=len(top),
    )
    return family, trace


def _check_output(family: SetFamily, n: int, m: int) -> None:
    if len(family) != m:
        raise InvariantError(f"built {len(family)} sets, wanted {m}")
    if not family.is_union_closed():
        raise InvariantError("construction is not union-closed")
    if not family.is_separating():
        raise InvariantError("construction is not separating")
    cap = min_weight_upper(n, m)
    w = family.weight()
    if not w < cap:
        raise InvariantError(f"weight {w} reached the cap {cap}")


def build(kind: str, n: int, m: Optional[int] = None) -> tuple[SetFamily, Optional[IntermediateTrace]]:
    """Dispatch a construction request; only intermediate takes m."""
    if kind not in KINDS:
        raise InvalidInputError(f"unknown construction kind {kind!r}")
    if kind == "intermediate":
        if m is None:
            raise InvalidInputError("intermediate needs a target size m")
        return intermediate(n, m)
    if m is not None:
        raise InvalidInputError(f"{kind} does not take a target size")
    return {"staircase": staircase, "plateau": plateau, "powerset": powerset}[kind](n), None
