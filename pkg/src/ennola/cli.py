"""Command line interface to the tables, class data, and consistency checks.

Every subcommand writes one deterministic document to stdout; progress and
timing diagnostics go to stderr, so repeated runs with the same arguments
produce byte-identical stdout. Formats: ``json`` (the default; every document
carries ``"schema": 1``), ``csv`` (flat rows, exact values as text), and
``pretty`` (aligned text; the only renderer that prints floating point, with
values rounded at 1e-10 for display). Exit status: 0 on success, 1 when a
verify check fails, 2 on an invalid configuration (the error is reported as a
JSON object on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .bruteforce import (
    DEFAULT_MAX_ORDER,
    SUPPORTED,
    class_census,
    symmetric_count,
    twisted_fs,
)
from .charmap import (
    CharLabel,
    CharTable,
    char_table,
    circ_product,
    dl_character,
    pi_class,
    star_product,
)
from .exactnum import Cyclotomic, QPoly
from .multipartitions import (
    MultiPartition,
    centralizer_order,
    class_size,
    enumerate_mp,
    unitary_group_order,
)
from .orbits import enumerate_orbits, level_order, orbit_count
from .reptables import (
    degree_hook,
    degree_records,
    degree_sum,
    degree_sum_delta,
    even_degree_sum,
    gelfand_graev,
    irreducible_multiplicities,
    model_decomposition,
    sp_induction,
)

SCHEMA = 1


# ---------------------------------------------------------------- rendering


def mp_text(mp: MultiPartition) -> str:
    """Compact one-line label: (size,residue):parts blocks joined by |.

    >>> from ennola.multipartitions import enumerate_mp
    >>> [mp_text(mu) for mu in enumerate_mp(2, "phi", 2)][:3]
    ['(1,0):1|(1,1):1', '(1,0):1|(1,2):1', '(1,0):1.1']
    """
    if not mp.assignment:
        return "()"
    return "|".join(
        f"({orb.size},{orb.residue}):" + ".".join(str(x) for x in lam)
        for orb, lam in mp.assignment
    )


def _signed_join(parts: list[tuple[str, str]]) -> str:
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def cyc_text(v: Cyclotomic) -> str:
    """Exact text for a cyclotomic value, rationals as plain fractions.

    >>> cyc_text(Cyclotomic.root(3) + 2)
    '2+z3'
    >>> cyc_text(Cyclotomic.from_rational(Fraction(-1, 2)))
    '-1/2'
    """
    if v.is_rational():
        return str(v.rational_value())
    parts = []
    for i, c in enumerate(v.to_fractions()):
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            var = f"z{v.conductor}" + (f"^{i}" if i > 1 else "")
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        parts.append(("-" if c < 0 else "+", body))
    return _signed_join(parts)


def qpoly_text(p: QPoly) -> str:
    """Text of a polynomial in q, highest exponent first.

    >>> qpoly_text(QPoly({3: 1, 1: -1}))
    'q^3-q'
    """
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in reversed(p.coeffs):
        if e == 0:
            body = str(abs(c))
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        parts.append(("-" if c < 0 else "+", body))
    return _signed_join(parts)


def float_text(z: complex) -> str:
    """Display form of a complex float, rounded at 1e-10.

    >>> float_text(0.9999999999999998 + 1e-13j)
    '1'
    >>> float_text(-0.5 + 0.8660254037844387j)
    '-0.5+0.8660254038i'
    """
    re = round(z.real, 10) + 0.0
    im = round(z.imag, 10) + 0.0
    if im == 0:
        return f"{re:.10g}"
    return f"{re:.10g}{'+' if im > 0 else '-'}{abs(im):.10g}i"


def _emit_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_table(header: list[str], rows: list[list[str]]) -> None:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]

    def line(cells: list[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    sys.stdout.write(line(header) + "\n")
    sys.stdout.write(line(["-" * w for w in widths]) + "\n")
    for r in rows:
        sys.stdout.write(line(r) + "\n")


# ----------------------------------------------------------- data commands


def _cmd_orbits(args: argparse.Namespace) -> int:
    q, n = args.q, args.n
    theta = enumerate_orbits(q, "theta", n)
    phi = enumerate_orbits(q, "phi", n)
    counts = [
        {"m": m, "orbits": orbit_count(q, m), "level_order": level_order(q, m)}
        for m in range(1, n + 1)
    ]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "orbits",
                "q": q,
                "max_size": n,
                "theta": [o.to_json() for o in theta],
                "phi": [o.to_json() for o in phi],
                "counts": counts,
            }
        )
    elif args.format == "csv":
        rows = [[o.kind, str(o.size), str(o.residue)] for o in theta + phi]
        _emit_csv(["kind", "size", "residue"], rows)
    else:
        _emit_table(
            ["kind", "size", "residue"],
            [[o.kind, str(o.size), str(o.residue)] for o in theta + phi],
        )
        sys.stdout.write("\n")
        _emit_table(
            ["m", "orbits of size m", "q^m - (-1)^m"],
            [[str(c["m"]), str(c["orbits"]), str(c["level_order"])] for c in counts],
        )
    return 0


def _cmd_classes(args: argparse.Namespace) -> int:
    n, q = args.n, args.q
    order = unitary_group_order(q, n)
    items = [
        {
            "label": mp_text(mu),
            "mu": mu.to_json(),
            "centralizer": centralizer_order(mu),
            "size": class_size(mu),
        }
        for mu in enumerate_mp(q, "phi", n)
    ]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "classes",
                "n": n,
                "q": q,
                "order": order,
                "count": len(items),
                "classes": items,
            }
        )
    else:
        rows = [[it["label"], str(it["centralizer"]), str(it["size"])] for it in items]
        header = ["label", "centralizer", "size"]
        if args.format == "csv":
            _emit_csv(header, rows)
        else:
            sys.stdout.write(f"U_{n}(F_{q*q}), order {order}, {len(items)} classes\n\n")
            _emit_table(header, rows)
    return 0


def _cmd_chartable(args: argparse.Namespace) -> int:
    table = char_table(args.n, args.q, processes=args.parallel)
    if args.format == "json":
        _emit_json({"schema": SCHEMA, "command": "chartable", **table.to_json()})
        return 0
    header = [""] + [mp_text(mu) for mu in table.cols]
    if args.format == "csv":
        rows = [
            [mp_text(label.lam)] + [cyc_text(v) for v in row]
            for label, row in zip(table.rows, table.values)
        ]
        _emit_csv(header, rows)
    else:
        rows = [
            [mp_text(label.lam)] + [float_text(v.approx()) for v in row]
            for label, row in zip(table.rows, table.values)
        ]
        order = unitary_group_order(args.q, args.n)
        sys.stdout.write(
            f"character table of U_{args.n}(F_{args.q**2}), order {order}\n"
        )
        sys.stdout.write(
            "class sizes: " + " ".join(str(s) for s in table.class_sizes) + "\n\n"
        )
        _emit_table(header, rows)
    return 0


def _cmd_degrees(args: argparse.Namespace) -> int:
    m, q = args.m, args.q
    records = degree_records(m, q)
    total = degree_sum(m, q)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "degrees",
                "m": m,
                "q": q,
                "degree_sum": total,
                "records": [
                    {
                        "label": r.label.to_json(),
                        "text": mp_text(r.label.lam),
                        "degree": r.degree,
                        "tau_parity": r.tau_parity,
                        "height": r.height,
                        "odd_conjugate": r.odd_conjugate,
                        "polynomial": qpoly_text(r.polynomial),
                    }
                    for r in records
                ],
            }
        )
        return 0
    header = ["label", "degree", "tau_parity", "height", "odd_conjugate", "polynomial"]
    rows = [
        [
            mp_text(r.label.lam),
            str(r.degree),
            str(r.tau_parity),
            str(r.height),
            str(r.odd_conjugate),
            qpoly_text(r.polynomial),
        ]
        for r in records
    ]
    if args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_table(header, rows)
        sys.stdout.write(f"\ndegree sum: {total}\n")
    return 0


def _constituents(elem) -> list[tuple[CharLabel, int]]:
    mults = irreducible_multiplicities(elem)
    out = []
    for label in sorted(mults, key=lambda lab: lab.lam.sort_key()):
        v = mults[label]
        if v.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {v}")
        out.append((label, int(v)))
    return out


def _cmd_decompose(args: argparse.Namespace) -> int:
    q = args.q
    if args.kind == "model":
        dec = model_decomposition(args.m, q, allow_even_q=args.allow_even_q)
        total = sum(
            degree_hook(label.lam) for _, labels in dec.parts for label in labels
        )
        if args.format == "json":
            _emit_json(
                {
                    "schema": SCHEMA,
                    "command": "decompose",
                    "kind": "model",
                    **dec.to_json(),
                    "degree_sum": total,
                }
            )
        else:
            rows = [
                [str(r), mp_text(label.lam), str(degree_hook(label.lam))]
                for r, labels in dec.parts
                for label in labels
            ]
            if args.format == "csv":
                _emit_csv(["r", "label", "degree"], rows)
            else:
                _emit_table(["r", "label", "degree"], rows)
                sys.stdout.write(f"\ndegree sum: {total}\n")
        return 0

    if args.kind == "gelfand-graev":
        elem = gelfand_graev(args.m, q)
        meta = {"m": args.m}
    else:
        elem = sp_induction(args.r, q, allow_even_q=args.allow_even_q)
        meta = {"r": args.r}
    parts = _constituents(elem)
    total = sum(mult * degree_hook(label.lam) for label, mult in parts)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "decompose",
                "kind": args.kind,
                **meta,
                "q": q,
                "count": len(parts),
                "value_at_identity": total,
                "constituents": [
                    {
                        "label": label.to_json(),
                        "text": mp_text(label.lam),
                        "multiplicity": mult,
                        "degree": degree_hook(label.lam),
                    }
                    for label, mult in parts
                ],
            }
        )
        return 0
    header = ["label", "multiplicity", "degree"]
    rows = [
        [mp_text(label.lam), str(mult), str(degree_hook(label.lam))]
        for label, mult in parts
    ]
    if args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_table(header, rows)
        sys.stdout.write(f"\nvalue at the identity: {total}\n")
    return 0


def _cmd_bruteforce(args: argparse.Namespace) -> int:
    n, q = args.n, args.q
    census = class_census(
        n, q, allow_large=args.allow_large, max_order=args.max_group_order
    )
    count = symmetric_count(
        n, q, allow_large=args.allow_large, max_order=args.max_group_order
    )
    indicators = twisted_fs(
        n,
        q,
        "transpose_inverse",
        allow_large=args.allow_large,
        max_order=args.max_group_order,
    )
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "bruteforce",
                "n": n,
                "q": q,
                "order": unitary_group_order(q, n),
                "classes": [
                    {"mu": mu.to_json(), "label": mp_text(mu), "size": size}
                    for mu, size in census.items()
                ],
                "symmetric_count": count,
                "fs_indicators": {
                    mp_text(label.lam): v for label, v in indicators.items()
                },
            }
        )
        return 0
    rows = [[mp_text(mu), str(size)] for mu, size in census.items()]
    if args.format == "csv":
        _emit_csv(["label", "size"], rows)
    else:
        order = unitary_group_order(q, n)
        sys.stdout.write(f"U_{n}(F_{q*q}) by matrix enumeration, order {order}\n\n")
        _emit_table(["label", "size"], rows)
        sys.stdout.write(f"\nsymmetric elements: {count}\n")
        sys.stdout.write(
            "twisted indicators: "
            + (
                "all 1"
                if all(v == 1 for v in indicators.values())
                else " ".join(str(v) for v in indicators.values())
            )
            + "\n"
        )
    return 0


# --------------------------------------------------------------- verification


class _Unsupported(Exception):
    """A check needs the brute-force model at a size it does not cover."""


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _check_divsum(args: argparse.Namespace) -> tuple[bool, str]:
    top = args.m if args.m is not None else 8
    q = args.q
    for m in range(1, top + 1):
        lhs = sum(r * orbit_count(q, r) for r in _divisors(m))
        rhs = level_order(q, m)
        if lhs != rhs:
            return False, f"m={m}: weighted orbit count {lhs}, level order {rhs}"
    return True, f"sum of r*d_r equals q^m - (-1)^m for m up to {top} at q={q}"


def _check_class_equation(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    order = unitary_group_order(q, n)
    mus = enumerate_mp(q, "phi", n)
    total = 0
    for mu in mus:
        a = centralizer_order(mu)
        if order % a:
            return False, f"centralizer {a} of {mp_text(mu)} does not divide {order}"
        total += order // a
    if total != order:
        return False, f"class sizes sum to {total}, group order is {order}"
    detail = f"{len(mus)} class sizes tile the group order {order}"
    if (n, q) in SUPPORTED:
        census = class_census(n, q, allow_large=True, max_order=args.max_group_order)
        for mu, size in census.items():
            if size != class_size(mu):
                return (
                    False,
                    f"brute size {size} at {mp_text(mu)}, formula {class_size(mu)}",
                )
        detail += "; the brute-force census agrees class by class"
    return True, detail


def _check_orthogonality(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    table = char_table(n, q, processes=args.parallel)
    order = unitary_group_order(q, n)
    m = len(table.rows)
    for i in range(m):
        for j in range(i, m):
            acc = Cyclotomic.from_rational(0)
            for k in range(len(table.cols)):
                term = table.values[i][k] * table.values[j][k].conj()
                term = term * table.class_sizes[k]
                a, b = Cyclotomic.common(acc, term)
                acc = a + b
            expected = order if i == j else 0
            if acc != expected:
                return (
                    False,
                    f"rows {mp_text(table.rows[i].lam)} and "
                    f"{mp_text(table.rows[j].lam)}: weighted inner product "
                    f"{acc!r}, expected {expected}",
                )
    return True, f"all {m}x{m} row pairs orthonormal at (n, q) = ({n}, {q})"


def _check_degree_sum(args: argparse.Namespace) -> tuple[bool, str]:
    m = args.m if args.m is not None else args.n
    q = args.q
    value = degree_sum(m, q)
    delta = degree_sum_delta(m, q)
    if value != delta:
        return False, f"hook route gives {value}, specialization gives {delta}"
    return (
        True,
        f"value {value} at m={m}, q={q} by hook product, principal "
        "specialization, and the closed form",
    )


def _check_even_sum(args: argparse.Namespace) -> tuple[bool, str]:
    m = args.m if args.m is not None else max(args.n // 2, 1)
    q = args.q
    value = even_degree_sum(m, q)
    return True, f"value {value} over even-conjugate labels at rank {2 * m}, q={q}"


def _check_sameprod(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    pairs = 0
    for na in range(1, n):
        for nb in range(1, n - na + 1):
            for ma in enumerate_mp(q, "phi", na):
                for mb in enumerate_mp(q, "phi", nb):
                    star = star_product(pi_class(ma), pi_class(mb))
                    circ = circ_product(pi_class(ma), pi_class(mb))
                    if star != circ:
                        return (
                            False,
                            f"products differ at {mp_text(ma)} x {mp_text(mb)}",
                        )
                    pairs += 1
    return True, f"Ennola and induction products agree on {pairs} class pairs"


def _check_dl(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    count = 0
    for size in range(1, n + 1):
        for nu in enumerate_mp(q, "theta", size):
            dl_character(nu, check=True)
            count += 1
    return True, f"{count} Deligne-Lusztig characters agree along both routes"


def _check_unsym(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    if (n, q) not in SUPPORTED:
        raise _Unsupported(f"no brute-force model at (n, q) = ({n}, {q})")
    brute = symmetric_count(n, q, allow_large=True, max_order=args.max_group_order)
    total = degree_sum(n, q)
    if brute != total:
        return False, f"symmetric count {brute}, degree sum {total}"
    return True, f"{brute} symmetric group elements match the degree sum"


def _check_fs(args: argparse.Namespace) -> tuple[bool, str]:
    n, q = args.n, args.q
    if (n, q) not in SUPPORTED:
        raise _Unsupported(f"no brute-force model at (n, q) = ({n}, {q})")
    indicators = twisted_fs(
        n, q, "transpose_inverse", allow_large=True, max_order=args.max_group_order
    )
    bad = [label for label, v in indicators.items() if v != 1]
    if bad:
        return False, f"indicator {indicators[bad[0]]} at {mp_text(bad[0].lam)}"
    return (
        True,
        f"all {len(indicators)} twisted indicators equal 1 and their "
        "degree-weighted sum counts the symmetric elements",
    )


_CHECKS = {
    "divsum": _check_divsum,
    "class-equation": _check_class_equation,
    "orthogonality": _check_orthogonality,
    "degree-sum": _check_degree_sum,
    "even-sum": _check_even_sum,
    "sameprod": _check_sameprod,
    "dl": _check_dl,
    "unsym": _check_unsym,
    "fs": _check_fs,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(_CHECKS) if args.check == "all" else [args.check]
    failed = False
    t0 = time.perf_counter()
    for name in names:
        start = time.perf_counter()
        try:
            ok, detail = _CHECKS[name](args)
            status = "PASS" if ok else "FAIL"
        except _Unsupported as exc:
            if args.check != "all":
                raise ValueError(str(exc)) from exc
            status, detail = "SKIP", str(exc)
        except AssertionError as exc:
            status, detail = "FAIL", f"internal invariant failed: {exc}"
        elapsed = time.perf_counter() - start
        sys.stdout.write(f"{status} {name}: {detail}\n")
        sys.stderr.write(f"  {name}: {elapsed:.3f}s\n")
        failed = failed or status == "FAIL"
    sys.stderr.write(f"total: {time.perf_counter() - t0:.3f}s\n")
    return 1 if failed else 0


# -------------------------------------------------------------------- parser


def _prime_power_base(q: int) -> int:
    if q < 2:
        raise ValueError(f"q must be a prime power at least 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    rest = q
    while rest % p == 0:
        rest //= p
    if rest != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    return p


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ennola",
        description="Exact class data and character tables of finite unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, *names: str) -> None:
        if "n" in names:
            p.add_argument("--n", type=int, required=True, help="matrix rank")
        if "q" in names:
            p.add_argument("--q", type=int, required=True, help="base field order")
        if "m" in names:
            p.add_argument("--m", type=int, required=True, help="total size")
        if "format" in names:
            p.add_argument(
                "--format", choices=("json", "csv", "pretty"), default="json"
            )

    p = sub.add_parser("orbits", help="Frobenius orbits and their counts")
    add_common(p, "n", "q", "format")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("classes", help="conjugacy class labels and sizes")
    add_common(p, "n", "q", "format")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("chartable", help="full character table, exact entries")
    add_common(p, "n", "q", "format")
    p.add_argument("--parallel", type=int, default=0, help="row worker processes")
    p.set_defaults(func=_cmd_chartable)

    p = sub.add_parser("degrees", help="character degree records")
    add_common(p, "m", "q", "format")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("decompose", help="multiplicities of induced characters")
    p.add_argument("kind", choices=("gelfand-graev", "sp-induction", "model"))
    p.add_argument("--q", type=int, required=True, help="base field order")
    p.add_argument("--m", type=int, help="total size (gelfand-graev, model)")
    p.add_argument("--r", type=int, help="half rank (sp-induction)")
    p.add_argument("--allow-even-q", action="store_true")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="consistency checks, PASS or FAIL per line")
    p.add_argument("check", choices=tuple(_CHECKS) + ("all",))
    p.add_argument("--n", type=int, default=2, help="matrix rank")
    p.add_argument("--q", type=int, default=2, help="base field order")
    p.add_argument("--m", type=int, help="total size for size-graded checks")
    p.add_argument("--parallel", type=int, default=0, help="row worker processes")
    p.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bruteforce", help="matrix-enumeration ground truth")
    add_common(p, "n", "q", "format")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=_cmd_bruteforce)

    return parser


def _validate(args: argparse.Namespace) -> None:
    if getattr(args, "q", None) is not None:
        _prime_power_base(args.q)
    for name in ("n", "m"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise ValueError(f"{name} must be at least 1, got {value}")
    r = getattr(args, "r", None)
    if r is not None and r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if getattr(args, "parallel", 0) and args.parallel < 0:
        raise ValueError(f"parallel must be nonnegative, got {args.parallel}")
    if getattr(args, "max_group_order", 1) < 1:
        raise ValueError("max-group-order must be positive")
    if getattr(args, "command", "") == "decompose":
        if args.kind in ("gelfand-graev", "model") and args.m is None:
            raise ValueError(f"{args.kind} needs --m")
        if args.kind == "sp-induction" and args.r is None:
            raise ValueError("sp-induction needs --r")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
