"""Hand transcription of the reference tables into tests/golden/*.tsv.

Each table is written down once in its symbolic form (families, index ranges
and closed-form degrees) and expanded here for every type of rank at most 8.
Nothing is imported from the package: these files are the independent side of
the golden-file comparison.

Type-name conventions when a family degenerates at small rank: D3 is written
A3 and C2 is written B2, matching how the classifier names them.
"""
from __future__ import annotations

import argparse
from pathlib import Path

TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(3, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def tname(fam: str, n: int) -> str | None:
    if n == 0:
        return None
    if (fam, n) == ("D", 3):
        return "A3"
    if (fam, n) == ("C", 2):
        return "B2"
    return f"{fam}{n}"


def tprod(*parts: tuple[str, int]) -> str:
    names = [x for x in (tname(f, n) for f, n in parts) if x]
    return "×".join(names) if names else "∅"


def combo(d: dict[int, int], symbol: str) -> str:
    terms = [("" if c == 1 else str(c)) + f"{symbol}{i}" for i, c in sorted(d.items()) if c]
    return " + ".join(terms) if terms else "0"


def w(*pairs: tuple[int, int]) -> dict[int, int]:
    """Weight from (index, coefficient) pairs; repeated indices add up."""
    out: dict[int, int] = {}
    for i, c in pairs:
        out[i] = out.get(i, 0) + c
    return out


def fw(*idx: int) -> dict[int, int]:
    return w(*[(i, 1) for i in idx])


def subset(s) -> str:
    s = sorted(s)
    return ",".join(map(str, s)) if s else "∅"


def vec(d: dict[int, int], n: int) -> tuple[int, ...]:
    return tuple(d.get(i, 0) for i in range(1, n + 1))


# ---------------------------------------------------------------- table 1

def table1() -> list[tuple[str, ...]]:
    rows = []
    for fam, n in TYPES:
        t = f"{fam}{n}"
        if fam == "A":
            for j in range(1, n + 1):
                rows.append((t, f"α{j}", tprod(("A", j - 1), ("A", n - j)), j * (n + 1 - j)))
        elif fam == "B":
            rows.append((t, f"α{n}", tprod(("A", n - 1)), n * (n + 1) // 2))
        elif fam == "C":
            rows.append((t, "α1", tprod(("C", n - 1)), 2 * n - 1))
        elif fam == "D":
            rows.append((t, "α1", tprod(("D", n - 1)), 2 * (n - 1)))
            for a in (n - 1, n):
                rows.append((t, f"α{a}", tprod(("A", n - 1)), n * (n - 1) // 2))
        elif (fam, n) == ("E", 6):
            for a in (1, 6):
                rows.append((t, f"α{a}", "D5", 16))
        elif (fam, n) == ("E", 7):
            rows.append((t, "α7", "E6", 27))
    return [tuple(map(str, r)) for r in rows]


# ---------------------------------------------------------------- table 2

def _swap(d: dict[int, int], perm: dict[int, int]) -> dict[int, int]:
    return {perm.get(i, i): c for i, c in d.items()}


def table2() -> list[tuple[str, ...]]:
    rows = []
    for fam, n in TYPES:
        t = f"{fam}{n}"
        found: list[tuple[int, list[dict[int, int]]]] = []
        if fam == "A":
            for j in range(1, n + 1):
                found.append((j, [fw(s, n + 1 - s) for s in range(1, min(j, n - j + 1) + 1)]))
        elif fam == "B":
            found.append((n, [fw(s) for s in range(1, n)] + [w((n, 2))]))
        elif fam in "CD":
            found.append((1, [fw(2), w((1, 2))]))
            if fam == "D":
                if n % 2 == 0:
                    m_n = [fw(2 * s) for s in range(1, n // 2)] + [w((n, 2))]
                else:
                    m_n = [fw(2 * s) for s in range(1, (n - 1) // 2)] + [fw(n - 1, n)]
                found.append((n - 1, [_swap(d, {n - 1: n, n: n - 1}) for d in m_n]))
                found.append((n, m_n))
        elif (fam, n) == ("E", 6):
            m6 = [fw(2), fw(1, 6)]
            found.append((1, [_swap(d, {1: 6, 6: 1, 3: 5, 5: 3}) for d in m6]))
            found.append((6, m6))
        elif (fam, n) == ("E", 7):
            found.append((7, [fw(1), fw(6), w((7, 2))]))
        for a, ms in found:
            rows.append((t, f"α{a}", ", ".join(combo(d, "ϖ") for d in ms)))
    return rows


# ---------------------------------------------------------------- table 3

def highest_short_weight(fam: str, n: int) -> dict[int, int]:
    return {
        "A": fw(1, n), "B": fw(1), "C": fw(2), "D": fw(2),
        "E": {6: fw(2), 7: fw(1), 8: fw(8)}.get(n), "F": fw(4), "G": fw(1),
    }[fam]


def table3() -> list[tuple[str, ...]]:
    rows = []
    for fam, n in TYPES:
        t = f"{fam}{n}"
        entries: list[tuple[dict[int, int], str, str, int]] = [(highest_short_weight(fam, n), "∅", "A1", 1)]
        if fam == "A":
            # the closing i = (n+1)/2 for odd n gives 2ϖ_i with the same pattern
            for i in range(2, (n + 1) // 2 + 1):
                entries.append((fw(i, n + 1 - i), tprod(("A", i - 1), ("A", i - 1)), tprod(("A", 2 * i - 1)), i * i))
        elif fam == "B":
            for i in range(2, n):
                entries.append((fw(i), tprod(("A", i - 1)), tprod(("B", i)), i * (i + 1) // 2))
            entries.append((w((n, 2)), tprod(("A", n - 1)), tprod(("B", n)), n * (n + 1) // 2))
        elif fam == "C":
            for i in range(2, n // 2 + 1):
                entries.append((fw(2 * i), tprod(("A", 2 * i - 1)), tprod(("D", 2 * i)), i * (2 * i - 1)))
            entries.append((w((1, 2)), tprod(("C", n - 1)), tprod(("C", n)), 2 * n - 1))
        elif fam == "D":
            for i in range(2, n):
                if 2 * i < n - 1:
                    entries.append((fw(2 * i), tprod(("A", 2 * i - 1)), tprod(("D", 2 * i)), i * (2 * i - 1)))
            if n % 2 == 0:
                for a in (n - 1, n):
                    entries.append((w((a, 2)), tprod(("A", n - 1)), tprod(("D", n)), n * (n - 1) // 2))
            else:
                m = (n - 1) // 2
                entries.append((fw(2 * m, 2 * m + 1), tprod(("A", 2 * m - 1)), tprod(("D", 2 * m)), m * (2 * m - 1)))
            entries.append((w((1, 2)), tprod(("D", n - 1)), tprod(("D", n)), 2 * (n - 1)))
        elif (fam, n) == ("E", 6):
            entries.append((fw(1, 6), "D4", "D5", 8))
        elif (fam, n) == ("E", 7):
            entries.append((fw(6), "D5", "D6", 10))
            entries.append((w((7, 2)), "E6", "E7", 27))
        elif (fam, n) == ("E", 8):
            entries.append((fw(1), "D7", "D8", 14))
        elif fam == "F":
            entries.append((fw(1), "C3", "C4", 7))
        entries.sort(key=lambda e: (e[3], tuple(-c for c in vec(e[0], n))))
        rows += [(t, combo(d, "ϖ"), j, j0, str(ell)) for d, j, j0, ell in entries]
    return rows


# ---------------------------------------------------------------- cascades

def root(coeffs: dict[int, int]) -> dict[int, int]:
    return {i: c for i, c in coeffs.items() if c}


def run(a: int, b: int, c: int = 1) -> dict[int, int]:
    return {i: c for i in range(a, b + 1)}


def add(*ds: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for d in ds:
        for i, c in d.items():
            out[i] = out.get(i, 0) + c
    return root(out)


def cascade(fam: str, n: int):
    """Return (members, xis): members are (name, beta, predecessor name);
    xis are (member name, weight, supp*)."""
    K: list[tuple[str, dict, str | None]] = []
    X: list[tuple[str, dict, set]] = []
    if fam == "A":
        for i in range(1, (n + 1) // 2 + 1):
            K.append((f"b{i}", run(i, n + 1 - i), f"b{i-1}" if i > 1 else None))
            X.append((f"b{i}", fw(i, n + 1 - i), set(range(1, i)) | set(range(n + 2 - i, n + 1))))
    elif fam == "B":
        for i in range(1, n + 1):
            K.append((f"b{i}", run(i, n), f"b{i-1}" if i > 1 else None))
            X.append((f"b{i}", fw(i) if i < n else w((n, 2)), set(range(1, i))))
    elif fam == "C":
        for i in range(1, n // 2 + 1):
            beta = add({2 * i - 1: 1}, run(2 * i, n - 1, 2), {n: 1})
            K.append((f"b{i}", beta, f"b{i-1}" if i > 1 else None))
            X.append((f"b{i}", fw(2 * i), set(range(1, 2 * i)) if i > 1 else set()))
        for i in range(2, (n + 2) // 2 + 1):
            K.append((f"p{i}", {2 * i - 3: 1}, f"b{i-1}"))
        X.append(("p2", w((1, 2)), set(range(2, n + 1))))
    elif fam == "D":
        for i in range(1, n // 2 + 1):
            if 2 * i <= n - 1:
                beta = add({2 * i - 1: 1}, run(2 * i, n - 2, 2), {n - 1: 1, n: 1})
            else:
                beta = {n: 1}
            K.append((f"b{i}", beta, f"b{i-1}" if i > 1 else None))
            if 2 * i < n - 1:
                xi = fw(2 * i)
            elif 2 * i == n - 1:
                xi = fw(n - 1, n)
            else:
                xi = w((n, 2))
            X.append((f"b{i}", xi, set(range(1, 2 * i)) if i > 1 else set()))
        for i in range(2, (n + 1) // 2 + 1):
            K.append((f"p{i}", {2 * i - 3: 1}, f"b{i-1}"))
        X.append(("p2", w((1, 2)), set(range(2, n + 1))))
        if n % 2 == 0:
            m = n // 2
            K.append((f"pp{m}", {n - 1: 1}, f"b{m-1}"))
            X.append((f"pp{m}", w((n - 1, 2)), set(range(1, n - 1)) | {n}))
    elif (fam, n) == ("E", 6):
        K += [("b1", dict(zip(range(1, 7), (1, 2, 2, 3, 2, 1))), None), ("b2", fw(1, 3, 4, 5, 6), "b1")]
        X += [("b1", fw(2), set()), ("b2", fw(1, 6), {2, 3, 4, 5})]
    elif (fam, n) == ("E", 7):
        K += [
            ("b1", dict(zip(range(1, 8), (2, 2, 3, 4, 3, 2, 1))), None),
            ("b2", root(dict(zip(range(1, 8), (0, 1, 1, 2, 2, 2, 1)))), "b1"),
            ("b3", {7: 1}, "b2"),
        ]
        X += [("b1", fw(1), set()), ("b2", fw(6), set(range(1, 6))), ("b3", w((7, 2)), set(range(1, 7)))]
    elif (fam, n) == ("E", 8):
        K += [
            ("b1", dict(zip(range(1, 9), (2, 3, 4, 6, 5, 4, 3, 2))), None),
            ("b2", root(dict(zip(range(1, 9), (2, 2, 3, 4, 3, 2, 1, 0)))), "b1"),
        ]
        X += [("b1", fw(8), set()), ("b2", fw(1), set(range(2, 9)))]
    elif fam == "F":
        K += [("b1", dict(zip(range(1, 5), (1, 2, 3, 2))), None), ("b2", fw(1, 2, 3), "b1")]
        X += [("b1", fw(4), set()), ("b2", fw(1), {2, 3, 4})]
    elif fam == "G":
        K.append(("b1", {1: 2, 2: 1}, None))
        X.append(("b1", fw(1), set()))
    return K, X


def appendix() -> list[tuple[str, ...]]:
    rows = []
    for fam, n in TYPES:
        t = f"{fam}{n}"
        K, X = cascade(fam, n)
        by_name = {name: beta for name, beta, _ in K}
        b1 = vec(by_name["b1"], n)
        key = lambda beta: tuple(-c for c in vec(beta, n))
        krows = []
        for name, beta, pred in K:
            diff = {i + 1 for i, (x, y) in enumerate(zip(b1, vec(beta, n))) if x != y}
            krows.append((key(beta), (t, "K", combo(beta, "α"), combo(by_name[pred], "α") if pred else "-", subset(diff))))
        xrows = [
            (key(by_name[name]), (t, "XI", combo(by_name[name], "α"), combo(xi, "ϖ"), subset(star)))
            for name, xi, star in X
        ]
        rows += [r for _, r in sorted(krows)] + [r for _, r in sorted(xrows)]
    return rows


HEADERS = {
    "table1.tsv": ("type", "alpha", "complement", "degree"),
    "table2.tsv": ("type", "alpha", "M"),
    "table3.tsv": ("type", "xi", "J", "J+alpha0", "ell"),
    "appendix_a.tsv": ("type", "kind", "beta", "value", "supp"),
}
BUILDERS = {"table1.tsv": table1, "table2.tsv": table2, "table3.tsv": table3, "appendix_a.tsv": appendix}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "golden")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, build in BUILDERS.items():
        lines = ["\t".join(HEADERS[name])] + ["\t".join(r) for r in build()]
        (args.out / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {args.out / name} ({len(lines) - 1} rows)")


if __name__ == "__main__":
    main()
