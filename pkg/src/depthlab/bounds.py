"""The f(k, t) recursion, the binomial bounds around it, and the factorial
arithmetic behind the long-path/induced-path reductions.

Python integers are unbounded, so no value here can overflow.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from depthlab.errors import InvalidInputError


def _check_domain(k: int, t: int) -> None:
    if k < 1 or t < 2:
        raise InvalidInputError(f"need k >= 1 and t >= 2, got k={k}, t={t}")


@lru_cache(maxsize=None)
def _f(k: int, t: int) -> int:
    if k == 1 or t == 2:
        return 1
    if t == 3:
        return k
    return _f(k, t - 2) + _f(k - 1, t) + 1


def f_value(k: int, t: int) -> int:
    """Upper bound on td(G, S) when td2(G) <= k and G has no induced S-path on t vertices."""
    _check_domain(k, t)
    return _f(k, t)


def g_lower(k: int, t: int) -> int:
    """C(floor((t-1)/2) + k - 1, floor((t-1)/2))."""
    _check_domain(k, t)
    h = (t - 1) // 2
    return comb(h + k - 1, h)


def g_upper(k: int, t: int) -> int:
    """Strict upper bound on td for P_t-free graphs with td2 <= k: twice g_lower."""
    return 2 * g_lower(k, t)


def f_closed_form(k: int, t: int) -> int:
    """2 * C(floor((t-1)/2) + k - 1, floor((t-1)/2)) - 1; equals f(k, t) for even t."""
    return g_upper(k, t) - 1


def conjectured_g(k: int, t: int) -> int:
    """Conjectured exact maximum treedepth; reported for comparison only."""
    return g_lower(k, t)


@dataclass
class ClosedFormReport:
    k_max: int
    t_max: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_f_closed_form(k_max: int, t_max: int) -> ClosedFormReport:
    """Check the even-t closed form, f < g_upper, g_lower <= f, and f(k,t) <= f(k,t+1)."""
    report = ClosedFormReport(k_max, t_max)
    for k in range(1, k_max + 1):
        for t in range(2, t_max + 1):
            f = f_value(k, t)
            checks = [
                (f < g_upper(k, t), f"f({k},{t})={f} is not below {g_upper(k, t)}"),
                (g_lower(k, t) <= f, f"f({k},{t})={f} is below g_lower={g_lower(k, t)}"),
                (f <= f_value(k, t + 1), f"f({k},{t})={f} exceeds f({k},{t + 1})"),
            ]
            if t % 2 == 0:
                checks.append((f == f_closed_form(k, t), f"f({k},{t})={f} != closed form {f_closed_form(k, t)}"))
            for ok, message in checks:
                report.checked += 1
                if not ok:
                    report.failures.append(message)
    return report


def bound_rows(k_max: int, t_max: int) -> list[dict[str, int | str]]:
    rows = []
    for k in range(1, k_max + 1):
        for t in range(2, t_max + 1):
            rows.append({
                "k": k,
                "t": t,
                "f": f_value(k, t),
                "g_lower": g_lower(k, t),
                "g_upper": g_upper(k, t),
                "closed_form": f_closed_form(k, t) if t % 2 == 0 else "",
                "conjectured_g": conjectured_g(k, t),
            })
    return rows


def bound_table_csv(k_max: int, t_max: int) -> str:
    rows = bound_rows(k_max, t_max)
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else ["k", "t"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def path_order_bracket(ell: int, k: int) -> range:
    """All n with C(ell+k-1, k) >= n > C(ell+k-2, k)."""
    return range(comb(ell + k - 2, k) + 1, comb(ell + k - 1, k) + 1)


def factorial_reduction_holds(k: int, ell: int, shift: int = 0) -> bool:
    """Check c * n^(1/j) >= ell over the whole bracket, with j = k - shift, c = j!.

    ``shift=0`` is the pathwidth reduction (chain graphs with parameter k);
    ``shift=1`` is the 2-treedepth one (parameter k-1).  Compared exactly as
    c^j * n >= ell^j.
    """
    j = k - shift
    if j < 1:
        raise InvalidInputError(f"reduction needs k - shift >= 1, got {j}")
    c = factorial(j)
    return all(c ** j * n >= ell ** j for n in path_order_bracket(ell, j))
