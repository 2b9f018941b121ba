"""Tabulate fold-map existence for N(k) x Sigma(g) into R^4.

The products of a non-orientable surface with an orientable one give an
infinite family where the answer depends only on the parity of k: the
obstruction is w_2 = (k mod 2) t, so even k admits fold maps and odd k
does not.
"""
from __future__ import annotations

from foldcheck.catalog import nonorientable_surface, orientable_surface, product
from foldcheck.decide import TargetSpec, decide_fold


def main() -> None:
    target = TargetSpec.euclidean(4)
    print("fold maps  N(k) x Sigma(g)  ->  R^4")
    header = "k\\g " + "".join(f"{g:>12}" for g in range(4))
    print(header)
    for k in range(1, 7):
        cells = []
        for g in range(4):
            m = product(nonorientable_surface(k), orientable_surface(g))
            verdict = decide_fold(m, target)
            cells.append(f"{verdict.outcome.render():>12}")
        print(f"{k:>3} " + "".join(cells))

    print()
    m = product(nonorientable_surface(3), orientable_surface(1))
    verdict = decide_fold(m, target)
    print(f"sample trace for {m.name}:")
    for entry in verdict.trace:
        print(f"  [{entry.citation}] {entry.value} => {verdict.outcome.render()}")


if __name__ == "__main__":
    main()
