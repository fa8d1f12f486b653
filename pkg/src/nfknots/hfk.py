"""Knot-Floer bookkeeping: bigraded dimension tables, detection predicates,
graded Euler characteristics, and the thin-profile enumerator.

The built-in table records the five genus-1 nearly fibered knot rows
(dimensions by (maslov, alexander) grading), grouped by determinant 7 or 9.
"""

from __future__ import annotations

from .laurent import LaurentPoly


class BigradedTable:
    """Finite map (maslov, alexander) -> positive dimension."""

    def __init__(self, dims):
        self.dims = {}
        for (m, a), d in dims.items():
            if d <= 0:
                raise ValueError("dimensions must be positive")
            self.dims[(m, a)] = self.dims.get((m, a), 0) + d

    def __eq__(self, other):
        return isinstance(other, BigradedTable) and self.dims == other.dims

    def __repr__(self):
        return f"BigradedTable({self.dims!r})"

    def total_dim(self):
        return sum(self.dims.values())

    def alexander_dim(self, a):
        return sum(d for (m, aa), d in self.dims.items() if aa == a)

    def support(self):
        return sorted(self.dims)


# dimensions of the five rows: (maslov, alexander) -> dim
TABLE_ROWS = {
    "5_2": BigradedTable({(2, 1): 2, (1, 0): 3, (0, -1): 2}),
    "15n43522": BigradedTable({(0, 1): 2, (-1, 0): 4, (0, 0): 1, (-2, -1): 2}),
    "Wh-T23_2": BigradedTable({(0, 1): 2, (-1, 0): 4, (0, 0): 1, (-2, -1): 2}),
    "P(-3,3,2n+1)": BigradedTable({(1, 1): 2, (0, 0): 5, (-1, -1): 2}),
    "Wh+T23_2": BigradedTable({(-1, 1): 2, (-2, 0): 4, (0, 0): 1, (-3, -1): 2}),
}

DET_7_ROWS = ("5_2", "15n43522", "Wh-T23_2")
DET_9_ROWS = ("P(-3,3,2n+1)", "Wh+T23_2")

UNKNOT_TABLE = BigradedTable({(0, 0): 1})


def alexander_from_table(table):
    """Graded Euler characteristic: sum of (-1)^m t^a dim."""
    out = {}
    for (m, a), d in table.dims.items():
        out[(a,)] = out.get((a,), 0) + ((-1) ** (m % 2)) * d
    return LaurentPoly(1, out)


def genus(table):
    if not table.dims:
        raise ValueError("empty table has no genus")
    return max(a for (m, a) in table.dims)


def top_dimension(table):
    g = genus(table)
    return table.alexander_dim(g)


def is_fibered(table):
    return top_dimension(table) == 1


def is_nearly_fibered(table):
    return top_dimension(table) == 2


def mirror_table(table):
    """(m, a) -> (-m, -a) relabeling; an involution."""
    return BigradedTable({(-m, -a): d for (m, a), d in table.dims.items()})


class ThinProfile:
    """Genus, the symmetric dimension sequence (d_-g..d_g), and the delta line."""

    def __init__(self, g, dims_by_alexander, delta=None):
        self.g = g
        self.dims = tuple(dims_by_alexander)
        if len(self.dims) != 2 * g + 1:
            raise ValueError("dimension sequence must cover -g..g")
        if self.dims != self.dims[::-1]:
            raise ValueError("thin profiles are symmetric")
        if self.dims[-1] < 1:
            raise ValueError("top dimension must be positive")
        self.delta = delta

    def __eq__(self, other):
        return (isinstance(other, ThinProfile)
                and (self.g, self.dims) == (other.g, other.dims))

    def __hash__(self):
        return hash((self.g, self.dims))

    def __repr__(self):
        return f"ThinProfile(g={self.g}, dims={self.dims}, delta={self.delta})"

    def total(self):
        return sum(self.dims)

    def alternating_sum(self):
        """Delta(1) up to sign: sum of (-1)^a d_a."""
        return sum(((-1) ** (a % 2)) * d
                   for a, d in zip(range(-self.g, self.g + 1), self.dims))


def validate_thin(table):
    """The ThinProfile if all support lies on one delta = m - a line, else None."""
    deltas = {m - a for (m, a) in table.dims}
    if len(deltas) != 1:
        return None
    delta = deltas.pop()
    g = genus(table)
    dims = [table.alexander_dim(a) for a in range(-g, g + 1)]
    if dims != dims[::-1] or 0 in dims:
        return None
    return ThinProfile(g, dims, delta)


def enumerate_thin_profiles(total_dim, fibered, genus_exact=None, strict_fibered=False,
                            unit_alexander=True):
    """All symmetric profiles with the stated total dimension.

    Constraints: top dimension is 1 for fibered and >= 2 otherwise; for genus
    >= 1 the top dimension is at most (strictly less than, when
    strict_fibered) the next one down; and when unit_alexander is set, the
    alternating sum must evaluate to +-1.
    """
    if total_dim < 1 or total_dim % 2 == 0:
        raise ValueError("total dimension must be odd and positive")
    out = []
    max_g = (total_dim - 1) // 2 if not fibered else (total_dim + 1) // 2
    for g in range(0, max_g + 1):
        if genus_exact is not None and g != genus_exact:
            continue
        for prof in _profiles_for_genus(total_dim, g, fibered, strict_fibered):
            if unit_alexander and abs(prof.alternating_sum()) != 1:
                continue
            out.append(prof)
    return out


def _profiles_for_genus(total_dim, g, fibered, strict_fibered):
    top = 1 if fibered else None
    if g == 0:
        if fibered and total_dim == 1:
            yield ThinProfile(0, (1,))
        elif not fibered and total_dim >= 1:
            # genus-0 non-fibered cannot occur (only the unknot has genus 0),
            # so nothing is emitted
            return
        return
    # choose d_g, then fill d_{g-1}..d_0 symmetric with the inequality at g
    tops = [1] if fibered else range(2, total_dim // 2 + 1)
    for dg in tops:
        rest = total_dim - 2 * dg
        if rest < 1:
            continue
        for seq in _symmetric_fills(rest, g - 1):
            full = [dg] + seq + [dg]
            neighbor = full[1]
            if strict_fibered and fibered:
                if not dg < neighbor:
                    continue
            elif not dg <= neighbor:
                continue
            yield ThinProfile(g, tuple(full))


def _symmetric_fills(total, half_len):
    """Symmetric positive sequences of length 2*half_len+1 with given sum."""
    if half_len == 0:
        if total >= 1 and total % 2 == 1:
            yield [total]
        return
    # choose the outermost pair value v, recurse inward
    for v in range(1, (total - 1) // 2 + 1):
        for inner in _symmetric_fills(total - 2 * v, half_len - 1):
            yield [v] + inner + [v]
