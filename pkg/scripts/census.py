"""穷举普查：小规模结构上的交叉校验，汇总写成 JSON。"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from app.config import ENUM_WORKERS, HYPERFIELD_ENUM_LIMIT, HYPERGROUP_ENUM_LIMIT, HYPERRING_ENUM_LIMIT  # noqa: E402
from app.services import (  # noqa: E402
    catalog_service,
    classify_service,
    construction_service,
    enumeration_service,
    isomorphism_service,
    kernel_service,
    semiring_service,
)

# n 元双重分配超域的同构类
EXPECTED_DD_HYPERFIELDS = {
    2: ["GF(2)", "K"],
    3: ["GF(3)", "S"],
    4: ["GF(4)"],
    5: ["GF(5)"],
    6: [],
    7: ["GF(7)"],
}

EXPECTED_SEMIRING_SIZES = {"K": 3, "S": 4, "GF(2)": 2, "GF(3)": 3, "GF(4)": 4, "GF(5)": 5, "GF(7)": 7}


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """解析命令参数。"""

    parser = argparse.ArgumentParser(description="超群 / 超域小规模穷举普查")
    parser.add_argument("--max-size", type=int, default=5, help="载体大小上限（超域最多 7，超群最多 6）")
    parser.add_argument("--workers", type=int, default=ENUM_WORKERS, help="枚举进程数，0 为 CPU 数")
    parser.add_argument("--out", default="", help="JSON 汇总写入的路径，默认打印到标准输出")
    return parser.parse_args(argv)


def sweep_dd_hyperfields(max_size: int, workers: int) -> dict:
    """双重分配超域恰为 K、S 与有限域。"""

    rows = {}
    passed = True
    for n in range(2, min(max_size, HYPERFIELD_ENUM_LIMIT) + 1):
        forms = enumeration_service.enumerate_hyperfields(n, dd=True, workers=workers)
        found = sorted(classify_service.catalog_name(form.structure) for form in forms)
        rows[str(n)] = found
        passed = passed and found == EXPECTED_DD_HYPERFIELDS[n]
    return {"name": "dd_hyperfields", "passed": passed, "details": rows}


def sweep_dd_implies_stringent(max_size: int, workers: int) -> dict:
    """全部超域上核对：双重分配的一定严格。"""

    rows = {}
    passed = True
    for n in range(2, min(max_size, HYPERFIELD_ENUM_LIMIT) + 1):
        forms = enumeration_service.enumerate_hyperfields(n, workers=workers)
        dd = 0
        counterexamples = 0
        for form in forms:
            t = form.structure
            if kernel_service.is_doubly_distributive(t)[0]:
                dd += 1
                if not kernel_service.is_stringent(t)[0]:
                    counterexamples += 1
        rows[str(n)] = {"hyperfields": len(forms), "dd": dd, "counterexamples": counterexamples}
        passed = passed and counterexamples == 0
    return {"name": "dd_implies_stringent", "passed": passed, "details": rows}


def sweep_dd_criterion(max_size: int, workers: int) -> dict:
    """严格超域上 (1⊞−1)² 判据与穷举的双重分配检查一致，且都能抽出分层。"""

    rows = {}
    passed = True
    for n in range(2, min(max_size, HYPERFIELD_ENUM_LIMIT) + 1):
        forms = enumeration_service.enumerate_hyperfields(n, stringent=True, workers=workers)
        agree = 0
        for form in forms:
            t = form.structure
            classify_service.extract_layering(t)
            if classify_service.dd_criterion_stringent(t) == kernel_service.is_doubly_distributive(t)[0]:
                agree += 1
        rows[str(n)] = {"stringent": len(forms), "agree": agree}
        passed = passed and agree == len(forms)
    return {"name": "dd_criterion", "passed": passed, "details": rows}


def sweep_stringent_hypergroups(max_size: int, workers: int) -> dict:
    """每个严格超群都与按类序重建的楔和同构。"""

    rows = {}
    for n in range(2, min(max_size, HYPERGROUP_ENUM_LIMIT) + 1):
        forms = enumeration_service.enumerate_hypergroups(n, stringent=True, workers=workers)
        shapes = sorted({" < ".join(classify_service.decompose_wedge(form.structure).labels) for form in forms})
        rows[str(n)] = {"count": len(forms), "shapes": shapes}
    return {"name": "stringent_hypergroups", "passed": True, "details": rows}


def sweep_hyperrings(max_size: int, workers: int) -> dict:
    """严格超环要么是环，要么是超域。"""

    rows = {}
    for n in range(1, min(max_size, HYPERRING_ENUM_LIMIT) + 1):
        verdicts: dict[str, int] = {}
        for form in enumeration_service.enumerate_hyperrings(n, workers=workers):
            t = form.structure
            if t.n == 1:
                verdict = "Ring"
            else:
                verdict = classify_service.reduce_hyperring(t)
            verdicts[verdict] = verdicts.get(verdict, 0) + 1
        rows[str(n)] = verdicts
    return {"name": "stringent_hyperrings", "passed": True, "details": rows}


def sweep_semirings() -> dict:
    rows = {}
    passed = True
    for name, expected in EXPECTED_SEMIRING_SIZES.items():
        semiring = semiring_service.associated_semiring(catalog_service.finite_builtin(name))
        ok = semiring.size == expected and semiring_service.check_semiring(semiring).passed
        rows[name] = semiring.size
        passed = passed and ok
    return {"name": "semiring_sizes", "passed": passed, "details": rows}


def sweep_quotients() -> dict:
    """有限域对全部单位子群的商都是超域；商掉整个单位群得到 K。"""

    rows = {}
    passed = True
    for q in (4, 5, 7, 8, 9):
        field = catalog_service.finite_field(q)
        for subgroup in construction_service.krasner_subgroups(field):
            quotient = construction_service.quotient(field, subgroup)
            label = f"GF({q})/{len(subgroup)}"
            rows[label] = classify_service.catalog_name(quotient)
            passed = passed and kernel_service.is_hyperfield(quotient)
            if len(subgroup) == q - 1:
                passed = passed and isomorphism_service.are_isomorphic(quotient, catalog_service.krasner())
    return {"name": "krasner_quotients", "passed": passed, "details": rows}


def run_census(max_size: int, workers: int) -> dict:
    sweeps = [
        sweep_dd_hyperfields(max_size, workers),
        sweep_dd_implies_stringent(max_size, workers),
        sweep_dd_criterion(max_size, workers),
        sweep_stringent_hypergroups(max_size, workers),
        sweep_hyperrings(max_size, workers),
        sweep_semirings(),
        sweep_quotients(),
    ]
    return {"max_size": max_size, "passed": all(item["passed"] for item in sweeps), "sweeps": sweeps}


def main(argv: list[str] | None = None) -> int:
    """入口函数。"""

    args = parse_args(argv)
    summary = run_census(args.max_size, args.workers)
    text = json.dumps(summary, ensure_ascii=False, indent=2)
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        print(f"[ok] {path}")
    else:
        print(text)
    for item in summary["sweeps"]:
        mark = "ok" if item["passed"] else "fail"
        print(f"[{mark}] {item['name']}", file=sys.stderr)
    return 0 if summary["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
