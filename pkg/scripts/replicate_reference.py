"""Compare runs on monthly index closes against published reference values.

    python scripts/replicate_reference.py FTSE=ftse.csv DJI=dji.csv SP500=sp.csv

Each file is a dated CSV (``date,value``) already cut to the reference
window, so the series length should equal the reference ``n``. The data
are not shipped with the package. theta must agree within 0.02 and the
estimate within 1%; the accepted (t, j) is printed for information only,
because it depends on the order in which the grid is searched.
"""
import sys

from krigmean.ingest import load_series
from krigmean.pipeline import run

# label: (n, theta, t, j, m_hat)
REFERENCE = {
    "FTSE": (132, 0.83283, 238, 426, 8463.42),
    "DJI": (113, 0.93670, 203, 356, 13603.87),
    "SP500": (102, 0.93569, 174, 270, 1788.80),
}
THETA_TOL = 0.02
M_REL_TOL = 0.01


def compare(label, n, theta, t, j, m_hat):
    """Return ``(ok, message)`` for one run against its reference row."""
    rn, rtheta, rt, rj, rm = REFERENCE[label]
    problems = []
    if n != rn:
        problems.append(f"n {n} != {rn}")
    if abs(theta - rtheta) > THETA_TOL:
        problems.append(f"theta {theta:.5f} vs {rtheta:.5f}")
    if m_hat is None or abs(m_hat - rm) > M_REL_TOL * abs(rm):
        problems.append(f"m_hat {m_hat} vs {rm:.2f}")
    info = f"(t, j)=({t}, {j}) reference ({rt}, {rj})"
    return not problems, "; ".join(problems + [info])


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        print(__doc__, file=sys.stderr)
        return 2
    all_ok = True
    for item in argv:
        label, _, path = item.partition("=")
        if label not in REFERENCE or not path:
            print(f"expected LABEL=PATH with LABEL in {sorted(REFERENCE)}: {item}", file=sys.stderr)
            return 2
        res = run(load_series(path, "dated"))
        acc = res.scan.accepted
        t, j, m = (acc.t, acc.j, acc.estimate.m_hat) if acc else (None, None, None)
        ok, msg = compare(label, res.scan.n, res.fit.theta, t, j, m)
        all_ok &= ok
        print(f"[{'OK' if ok else 'DIFF'}] {label}: theta={res.fit.theta:.5f} m_hat={m} {msg}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
