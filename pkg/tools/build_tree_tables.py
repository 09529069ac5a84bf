# tools/build_tree_tables.py
"""
Buduje tabelę wielomianów Alexandra wszystkich drzew na N wierzchołkach
(z flagami kolizji).

Wejście:
    - brak plików; drzewa generuje networkx (nonisomorphic_trees)

Wyjście:
    - data/tables/trees_<N>.csv
      Kolumny: name, n, delta, markov, det_b, gcd, frobenius, d<k>...,
               delta_collision (czy inne drzewo ma ten sam Δ),
               unresolved (czy żaden liczony niezmiennik go nie odróżnia)

Użycie:
    python -m tools.build_tree_tables 9 8
    (drugi argument – opcjonalny indeks kraty d_k)
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import List

import pandas as pd

from application.explorer import collision_scan
from integration.corpus import trees

# gdzie zapiszemy tabele
OUTPUT_DIR = Path("data/tables")

# domyślnie drzewa na 8 wierzchołkach (jedyna kolizja dla n <= 8)
DEFAULT_N = 8


def build_table(n: int, ks: List[int]) -> pd.DataFrame:
    family = trees(n)
    print(f"[INFO] Drzew na {n} wierzchołkach: {len(family)}")

    report = collision_scan(
        [e.quiver for e in family],
        ks,
        names=[e.name for e in family],
        orders=[e.effective_order for e in family],
    )
    table = report.table.copy()

    in_delta = {name for group in report.delta_groups for name in group}
    unresolved = {name for group in report.full_groups for name in group}
    table["delta_collision"] = table["name"].isin(in_delta)
    table["unresolved"] = table["name"].isin(unresolved)

    print(f"[INFO] Par/grup z tym samym Δ: {len(report.delta_groups)}")
    for group in report.delta_groups:
        state = "nierozróżnione" if group in report.full_groups else "rozróżnione kratami/NWD"
        print(f"[INFO]   {', '.join(group)}: {state}")
    return table.sort_values(["delta", "name"]).reset_index(drop=True)


def main(argv: List[str]) -> None:
    n = int(argv[0]) if argv else DEFAULT_N
    ks = [int(k) for k in argv[1:]]

    table = build_table(n, ks)

    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    out = OUTPUT_DIR / f"trees_{n}.csv"
    table.to_csv(out, index=False)
    print(f"[INFO] Tabela zapisana do: {out.resolve()}")


if __name__ == "__main__":
    main(sys.argv[1:])
