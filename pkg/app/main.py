"""hyperkernel 命令行入口。

每条子命令产出一个 CommandReport：默认用模板渲染成文本，``--json`` 时输出
JSON 文档。退出码：0 全部检查通过；1 检查失败或定理交叉校验失败；2 用法错误。
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .config import DEFAULT_DEPTH, DEFAULT_SEED, DEFAULT_WINDOW, ENUM_WORKERS, LOG_LEVEL
from .errors import USAGE_ERRORS, InvalidArgumentError, KernelError, TheoremViolationError, UnsupportedOperationError
from .models.report import CheckReport, CommandReport, Violation
from .models.structure import FiniteHyperStructure
from .models.symbolic import SymbolicHyperfield
from .services import (
    catalog_service,
    classify_service,
    construction_service,
    enumeration_service,
    isomorphism_service,
    kernel_service,
    ordered_service,
    report_service,
    semiring_service,
    series_service,
    structure_file_service,
    symbolic_service,
)

# 配置日志
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)

logger = logging.getLogger(__name__)

Structure = FiniteHyperStructure | SymbolicHyperfield


# ---- 公共工具 ----


def _source_text(args: argparse.Namespace) -> str:
    return getattr(args, "builtin", None) or getattr(args, "input", None) or ""


def _load(args: argparse.Namespace) -> Structure:
    if getattr(args, "builtin", None):
        return catalog_service.builtin(args.builtin)
    if not getattr(args, "input", None):
        raise InvalidArgumentError("需要结构文件路径或 --builtin NAME")
    return structure_file_service.load_structure(args.input)


def _load_finite(token: str) -> FiniteHyperStructure:
    structure = structure_file_service.load_structure(token)
    if not isinstance(structure, FiniteHyperStructure):
        raise UnsupportedOperationError(f"{token} 是符号结构，此命令只接受有限结构")
    return structure


def _window(args: argparse.Namespace) -> tuple[int, int]:
    return ordered_service.parse_window(args.window)


def _window_text(window: tuple[int, int]) -> str:
    return f"{window[0]}..{window[1]}"


def _named(report: CheckReport, names: Sequence[str]) -> list[Violation]:
    """给没有说明的违例补上元素名。"""

    out = []
    for item in report.violations:
        if item.detail or any(i >= len(names) for i in item.witness):
            out.append(item)
        else:
            out.append(item.model_copy(update={"detail": ", ".join(names[i] for i in item.witness)}))
    return out


def _members(t: FiniteHyperStructure, members: Sequence[int]) -> str:
    return " ".join(t.names[x] for x in members)


def _check_finite(t: FiniteHyperStructure) -> CheckReport:
    if t.mul is None:
        return kernel_service.check_hypergroup(t)
    if t.kind == "hyperfield":
        return kernel_service.check_hyperfield(t)
    return kernel_service.check_skew_hyperring(t)


def _write(path: str | Path, text: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info("已写出 %s", target)
    return target


# ---- 子命令 ----


def cmd_check(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    if isinstance(structure, SymbolicHyperfield):
        window = _window(args)
        table = symbolic_service.window_table(structure, window)
        report = symbolic_service.check_window(structure, window)
        if table.truncated:
            logger.warning("%s 的检查限于窗口 %s", structure.label, _window_text(window))
        return CommandReport(
            command="check",
            input=_source_text(args),
            passed=report.passed,
            witnesses=_named(report, table.structure.names),
            window=_window_text(window),
            details={"kind": "hyperfield", "layers": len(table.layers), "truncated": table.truncated},
        )

    t = structure
    report = _check_finite(t)
    details = {"kind": t.kind, "size": t.n}
    if report.passed:
        details["commutative"] = kernel_service.is_commutative(t)
        details["stringent"] = kernel_service.is_stringent(t)[0]
        details["reversible"] = kernel_service.is_reversible(t)
        if t.mul is not None:
            details["doubly_distributive"] = kernel_service.is_doubly_distributive(t)[0]
    return CommandReport(
        command="check",
        input=_source_text(args),
        passed=report.passed,
        witnesses=_named(report, t.names),
        details=details,
    )


def cmd_classify(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    source = _source_text(args)
    if isinstance(structure, SymbolicHyperfield):
        window = _window(args)
        extraction = classify_service.extract_layering(structure, window)
        table = symbolic_service.window_table(structure, window)
        decomposition = classify_service.decompose_wedge(table.structure)
        audit = classify_service.identity_audit(structure, window)
        return CommandReport(
            command="classify",
            input=source,
            passed=audit.passed,
            witnesses=_named(audit, table.structure.names),
            decomposition=decomposition.labels,
            window=_window_text(window),
            details={
                "base": classify_service.catalog_name(extraction.base),
                "base_kind": extraction.base_kind,
                "group": extraction.group.label,
                "dd": classify_service.dd_criterion_stringent(structure),
                "truncated": extraction.truncated,
            },
        )

    t = structure
    if t.mul is None:
        decomposition = classify_service.decompose_wedge(t)
        audit = classify_service.identity_audit(t)
        return CommandReport(
            command="classify",
            input=source,
            passed=audit.passed,
            witnesses=_named(audit, t.names),
            decomposition=decomposition.labels,
            details={"kind": "hypergroup", "classes": [_members(t, c) for c in decomposition.classes]},
        )

    if not kernel_service.is_hyperfield(t):
        verdict = classify_service.reduce_hyperring(t)
        return CommandReport(command="classify", input=source, passed=True, details={"kind": t.kind, "reduces_to": verdict})

    extraction = classify_service.extract_layering(t)
    decomposition = classify_service.decompose_wedge(t.additive())
    dd, _ = kernel_service.is_doubly_distributive(t)
    if dd != classify_service.dd_criterion_stringent(t):
        logger.error("%s：双重分配的穷举结果与判据不符", t.label)
        raise TheoremViolationError(f"{t.label} 的双重分配判据与穷举结果矛盾")
    audit = classify_service.identity_audit(t)
    return CommandReport(
        command="classify",
        input=source,
        passed=audit.passed,
        witnesses=_named(audit, t.names),
        decomposition=decomposition.labels,
        details={
            "base": classify_service.catalog_name(t),
            "base_kind": extraction.base_kind,
            "group": extraction.group.label,
            "dd": dd,
            "real": classify_service.is_real(t),
        },
    )


def cmd_decompose(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    window = None
    if isinstance(structure, SymbolicHyperfield):
        window = _window(args)
        t = symbolic_service.window_table(structure, window).structure
    else:
        t = structure.additive()
    decomposition = classify_service.decompose_wedge(t)
    rebuilt = decomposition.rebuilt
    return CommandReport(
        command="decompose",
        input=_source_text(args),
        passed=True,
        decomposition=decomposition.labels,
        window=_window_text(window) if window else None,
        details={
            "classes": [_members(t, c) for c in decomposition.classes],
            "iso": {t.names[x]: rebuilt.names[decomposition.iso[x]] for x in range(t.n)},
        },
    )


def cmd_iso(args: argparse.Namespace) -> CommandReport:
    left = _load_finite(args.left)
    right = _load_finite(args.right)
    found = isomorphism_service.find_isomorphism(left, right)
    details: dict = {"isomorphic": found is not None}
    if found is not None:
        details["map"] = {left.names[x]: right.names[found[x]] for x in range(left.n)}
        details["canonical_key_equal"] = (
            isomorphism_service.canonical_form(left).key == isomorphism_service.canonical_form(right).key
        )
    return CommandReport(command="iso", input=f"{args.left} {args.right}", passed=found is not None, details=details)


def _construct(args: argparse.Namespace) -> tuple[Structure, str]:
    """返回构造结果与可写回文件的文本。"""

    kind = args.construction
    if kind == "product":
        result = construction_service.product(_load_finite(args.left), _load_finite(args.right))
        return result, structure_file_service.serialize_structure(result)
    if kind == "wedge":
        layers = [_load_finite(token).additive() for token in args.layers]
        result = construction_service.wedge_sum(layers, name=f"wedge({','.join(args.layers)})")
        return result, structure_file_service.serialize_structure(result)
    if kind == "layer":
        base = _load_finite(args.base)
        group = ordered_service.parse_index(args.group)
        action = catalog_service.frobenius(base) if args.frobenius else None
        result = construction_service.layering(base, group, action)
        twist = " frobenius" if args.frobenius else ""
        return result, f"construct: layer {args.base} {args.group}{twist}\n"
    if kind == "quotient":
        field = _load_finite(args.field)
        names = [item.strip() for item in args.subgroup.strip("{} ").split(",") if item.strip()]
        result = construction_service.quotient(field, [field.index_of(item) for item in names])
        return result, structure_file_service.serialize_structure(result)
    raise InvalidArgumentError(f"未知的构造：{kind}")


def cmd_construct(args: argparse.Namespace) -> CommandReport:
    if args.construction == "semiring":
        return _semiring_report(args, "construct semiring", _load_finite(args.source))

    result, text = _construct(args)
    window = None
    if isinstance(result, SymbolicHyperfield):
        window = _window(args)
        table = symbolic_service.window_table(result, window)
        report = symbolic_service.check_window(result, window)
        names = table.structure.names
    else:
        report = _check_finite(result)
        names = result.names
    details: dict = {"label": result.label, "text": text.rstrip("\n")}
    if args.out:
        details["written"] = str(_write(args.out, text))
    return CommandReport(
        command=f"construct {args.construction}",
        input=" ".join(args.operands_text),
        passed=report.passed,
        witnesses=_named(report, names),
        window=_window_text(window) if window else None,
        details=details,
    )


def cmd_quotient(args: argparse.Namespace) -> CommandReport:
    field = _load_finite(args.field)
    rows = {}
    witnesses = []
    for subgroup in construction_service.krasner_subgroups(field):
        label = "{" + ",".join(field.names[u] for u in subgroup) + "}"
        q = construction_service.quotient(field, subgroup, name=f"{field.label}/{label}")
        report = kernel_service.check_hyperfield(q)
        witnesses.extend(item.model_copy(update={"detail": f"{label}: {item.detail}"}) for item in _named(report, q.names))
        rows[label] = f"{q.n} 元，≅ {classify_service.catalog_name(q)}"
    return CommandReport(
        command="quotient",
        input=args.field,
        passed=not witnesses,
        witnesses=witnesses,
        details={"quotients": rows},
    )


def _semiring_report(args: argparse.Namespace, command: str, t: FiniteHyperStructure) -> CommandReport:
    semiring = semiring_service.associated_semiring(t)
    report = semiring_service.check_semiring(semiring)
    return CommandReport(
        command=command,
        input=_source_text(args) or getattr(args, "source", ""),
        passed=report.passed,
        witnesses=report.violations,
        details={
            "size": semiring.size,
            "elements": [t.format_mask(mask) for mask in semiring.elements],
        },
    )


def cmd_semiring(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    if isinstance(structure, FiniteHyperStructure):
        return _semiring_report(args, "semiring", structure)
    window = _window(args)
    semiring = semiring_service.layered_semiring(structure, window)
    return CommandReport(
        command="semiring",
        input=_source_text(args),
        passed=True,
        window=_window_text(window),
        details={
            "family": semiring.family,
            "closure_size": semiring.closure_size,
            "elements": [symbolic_service.format_description(item, structure) for item in semiring.elements],
            "truncated": semiring.truncated,
        },
    )


def _series_context(args: argparse.Namespace):
    ring = series_service.series_ring(args.ring, twisted=args.frobenius)
    group = ordered_service.parse_index(args.group)
    return ring, group


def cmd_series(args: argparse.Namespace) -> CommandReport:
    ring, group = _series_context(args)
    depth = args.depth
    common = {"ring": ring.label, "group": group.label}
    if args.operation == "inv":
        p = series_service.parse_series(args.series, ring, group)
        inverse = series_service.series_inv(p)
        one = series_service.one_series(ring, group)
        right = series_service.series_eq_depth(series_service.series_mul(p, inverse), one, depth)
        left = series_service.series_eq_depth(series_service.series_mul(inverse, p), one, depth)
        return CommandReport(
            command="series inv",
            input=args.series,
            passed=right and left,
            depth=depth,
            details={**common, "inverse": series_service.format_series(inverse, depth), "verified": right and left},
        )
    if args.operation == "mul":
        p = series_service.parse_series(args.left, ring, group)
        q = series_service.parse_series(args.right, ring, group)
        return CommandReport(
            command="series mul",
            input=f"{args.left} ; {args.right}",
            passed=True,
            depth=depth,
            details={**common, "product": series_service.format_series(series_service.series_mul(p, q), depth)},
        )

    if args.x is not None:
        target = series_service.quotient_target(ring, group, args.mode)
        x = symbolic_service.parse_element(args.x, target)
        y = symbolic_service.parse_element(args.y if args.y is not None else args.x, target)
        sample = series_service.quotient_sample_check(
            x, y, ring, group, args.mode, trials=args.trials or 1000, depth=depth, seed=args.seed
        )
        return CommandReport(
            command="series check",
            input=f"{sample.x} ⊞ {sample.y}",
            passed=sample.passed,
            witnesses=[Violation(axiom="QuotientAddition", detail=item) for item in sample.outside],
            depth=depth,
            seed=args.seed,
            details={
                **common,
                "mode": sample.mode,
                "expected": sample.expected,
                "observed": sample.observed,
                "coverage": round(sample.coverage, 4),
                "downset_hits": sample.downset_hits,
            },
        )

    trials = args.trials or 100
    laws = series_service.check_ring_laws(ring, group, trials=trials, depth=depth, seed=args.seed)
    inversion = series_service.check_inversion(ring, group, trials=trials, depth=depth, seed=args.seed)
    witnesses = laws.violations + inversion.violations
    return CommandReport(
        command="series check",
        input=f"{ring.label}(({group.label}))",
        passed=not witnesses,
        witnesses=witnesses,
        depth=depth,
        seed=args.seed,
        details={**common, "trials": trials},
    )


def cmd_valuation(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    window = _window(args) if isinstance(structure, SymbolicHyperfield) else None
    valuation = classify_service.valuation_of(structure, window)
    if window is None:
        names = structure.names
    else:
        names = [symbolic_service.format_element(x, structure) for x in symbolic_service.window_elements(structure, window)]
    return CommandReport(
        command="valuation",
        input=_source_text(args),
        passed=valuation.report.passed,
        witnesses=_named(valuation.report, names),
        window=_window_text(window) if window else None,
        details={
            "kernel": classify_service.catalog_name(valuation.kernel),
            "kernel_kind": valuation.kernel_kind,
            "pairs_checked": valuation.pairs_checked,
            "values": valuation.values,
        },
    )


def cmd_ordering(args: argparse.Namespace) -> CommandReport:
    structure = _load(args)
    if isinstance(structure, FiniteHyperStructure):
        result = classify_service.find_ordering(structure)
        details: dict = {"real": result.is_real}
        if result.found:
            details["positive_cone"] = _members(structure, result.ordering)
        return CommandReport(command="ordering", input=_source_text(args), passed=True, details=details)

    window = _window(args)
    if classify_service.identify_layer(structure.base).kind != "Sign":
        return CommandReport(
            command="ordering",
            input=_source_text(args),
            passed=True,
            window=_window_text(window),
            details={"real": classify_service.is_real(structure.base), "base": classify_service.catalog_name(structure.base)},
        )
    cones = classify_service.positive_cones(structure, window)
    return CommandReport(
        command="ordering",
        input=_source_text(args),
        passed=cones.split_verified,
        window=_window_text(window),
        details={
            "real": True,
            "cones": [" ".join(symbolic_service.format_element(x, structure) for x in cone) for cone in cones.cones],
        },
    )


def _hypergroup_summary(t: FiniteHyperStructure, stringent: bool) -> str:
    if stringent:
        return " < ".join(classify_service.decompose_wedge(t).labels)
    return "commutative" if kernel_service.is_commutative(t) else "non-commutative"


def cmd_enumerate(args: argparse.Namespace) -> CommandReport:
    n = args.size
    workers = args.workers
    if args.dd and not args.hyperfield:
        raise InvalidArgumentError("--dd 只能与 --hyperfield 一起使用")
    if args.hyperring:
        forms = enumeration_service.enumerate_hyperrings(n, workers=workers)
        summary = {form.structure.label: classify_service.reduce_hyperring(form.structure) for form in forms}
        what = "hyperring"
    elif args.hyperfield:
        forms = enumeration_service.enumerate_hyperfields(n, stringent=args.stringent, dd=args.dd, workers=workers)
        summary = {form.structure.label: classify_service.catalog_name(form.structure) for form in forms}
        what = "hyperfield"
    else:
        forms = enumeration_service.enumerate_hypergroups(
            n, stringent=args.stringent, commutative=args.commutative, workers=workers
        )
        summary = {form.structure.label: _hypergroup_summary(form.structure, args.stringent) for form in forms}
        what = "hypergroup"
    details: dict = {"kind": what, "count": len(forms), "classes": summary}
    if args.out:
        for form in forms:
            _write(Path(args.out) / f"{form.structure.label}.hs", structure_file_service.serialize_structure(form.structure))
        details["written"] = str(args.out)
    return CommandReport(command="enumerate", input=f"n={n}", passed=True, details=details)


# ---- 参数解析 ----


def _common_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="输出机器可读的 JSON 报告")
    parent.add_argument("--window", default=DEFAULT_WINDOW, help=f"符号结构的层窗口 a..b（默认 {DEFAULT_WINDOW}）")
    parent.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help=f"级数比较深度（默认 {DEFAULT_DEPTH}）")
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"随机种子（默认 {DEFAULT_SEED}）")
    return parent


def _structure_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("input", nargs="?", help="结构文件路径或内置名")
    parent.add_argument("--builtin", help="内置结构名，如 K、S、GF(4)、Zminusinf")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    structure = _structure_parser()
    parser = argparse.ArgumentParser(prog="hyperkernel", description="超群、超域与分层结构的计算内核")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("check", cmd_check, "检查公理"),
        ("classify", cmd_classify, "严格结构的分类"),
        ("decompose", cmd_decompose, "楔和分解"),
        ("semiring", cmd_semiring, "伴随半环"),
        ("valuation", cmd_valuation, "赋值 ν = ψ"),
        ("ordering", cmd_ordering, "序与正锥"),
    ):
        command = sub.add_parser(name, parents=[common, structure], help=help_text)
        command.set_defaults(handler=handler)

    iso = sub.add_parser("iso", parents=[common], help="同构判定")
    iso.add_argument("left", help="结构文件或内置名")
    iso.add_argument("right", help="结构文件或内置名")
    iso.set_defaults(handler=cmd_iso)

    construct = sub.add_parser("construct", help="构造新结构")
    kinds = construct.add_subparsers(dest="construction", required=True)
    product = kinds.add_parser("product", parents=[common], help="直积")
    product.add_argument("left")
    product.add_argument("right")
    wedge = kinds.add_parser("wedge", parents=[common], help="楔和（自下而上）")
    wedge.add_argument("layers", nargs="+")
    layer = kinds.add_parser("layer", parents=[common], help="分层 M ⋊ G")
    layer.add_argument("base")
    layer.add_argument("group", help="chain(n)、Z、Z^k、Q 或 1")
    layer.add_argument("--frobenius", action="store_true", help="层以 Frobenius 作用")
    quotient = kinds.add_parser("quotient", parents=[common], help="Krasner 商 K/U")
    quotient.add_argument("field")
    quotient.add_argument("subgroup", help="子群元素，如 {1,4}")
    semiring = kinds.add_parser("semiring", parents=[common], help="伴随半环")
    semiring.add_argument("source")
    for kind in (product, wedge, layer, quotient, semiring):
        kind.add_argument("--out", help="把结果写成结构文件")
        kind.set_defaults(handler=cmd_construct)

    quotients = sub.add_parser("quotient", parents=[common], help="有限域的全部 Krasner 商")
    quotients.add_argument("field")
    quotients.set_defaults(handler=cmd_quotient)

    series = sub.add_parser("series", help="惰性形式幂级数")
    operations = series.add_subparsers(dest="operation", required=True)
    series_common = argparse.ArgumentParser(add_help=False)
    series_common.add_argument("--ring", default="Q", help="系数：Q 或 GF(q)（默认 Q）")
    series_common.add_argument("--group", default="Z", help="指数群：Z 或 Q（默认 Z）")
    series_common.add_argument("--frobenius", action="store_true", help="按 Frobenius 扭曲乘法")
    inv = operations.add_parser("inv", parents=[common, series_common], help="求逆")
    inv.add_argument("series", help="如 \"1 + x^-1\"")
    mul = operations.add_parser("mul", parents=[common, series_common], help="乘法")
    mul.add_argument("left")
    mul.add_argument("right")
    check = operations.add_parser("check", parents=[common, series_common], help="环律、求逆或商映射抽样")
    check.add_argument("--trials", type=int, help="随机试验次数")
    check.add_argument("--mode", choices=("Krasner", "Sign", "Field"), default="Krasner", help="商模式")
    check.add_argument("--x", help="商中的元素，如 0 或 (-1,2)")
    check.add_argument("--y", help="商中的元素（默认同 --x）")
    for op in (inv, mul, check):
        op.set_defaults(handler=cmd_series)

    enum = sub.add_parser("enumerate", parents=[common], help="小规模穷举")
    enum.add_argument("--size", type=int, required=True, help="载体大小 n")
    enum.add_argument("--stringent", action="store_true", help="只要严格结构")
    enum.add_argument("--dd", action="store_true", help="只要双重分配的超域")
    enum.add_argument("--hyperfield", action="store_true", help="枚举超域")
    enum.add_argument("--hyperring", action="store_true", help="枚举严格超环")
    enum.add_argument("--commutative", action="store_true", help="只要交换超群")
    enum.add_argument("--workers", type=int, default=ENUM_WORKERS, help="进程数（0 为 CPU 数）")
    enum.add_argument("--out", help="把每个同构类写入该目录")
    enum.set_defaults(handler=cmd_enumerate)
    return parser


def _operands_text(args: argparse.Namespace) -> list[str]:
    keys = ("left", "right", "layers", "base", "group", "field", "subgroup", "source")
    out = []
    for key in keys:
        value = getattr(args, key, None)
        if isinstance(value, list):
            out.extend(value)
        elif isinstance(value, str):
            out.append(value)
    return out


def _emit(report: CommandReport, as_json: bool) -> None:
    text = report_service.to_json(report) if as_json else report_service.render_text(report)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


VALUE_OPTIONS = ("--window", "--x", "--y")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """把 ``--window -5..5`` 拼成 ``--window=-5..5``，否则 argparse 会把负值当成选项。"""

    out: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in VALUE_OPTIONS:
            value = next(tokens, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    """执行一条命令并返回退出码。"""

    parser = build_parser()
    argv = _attach_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args.operands_text = _operands_text(args)
    as_json = getattr(args, "json", False)

    try:
        report = args.handler(args)
    except USAGE_ERRORS as exc:
        print(f"错误[{exc.code}]：{exc}", file=sys.stderr)
        return 2
    except TheoremViolationError as exc:
        logger.error("定理交叉校验失败：%s", exc)
        report = CommandReport(
            command=args.command,
            input=_source_text(args) or " ".join(args.operands_text),
            passed=False,
            witnesses=[Violation(axiom="TheoremViolation", detail=str(exc))],
        )
    except KernelError as exc:
        print(f"错误[{exc.code}]：{exc}", file=sys.stderr)
        return 1
    _emit(report, as_json)
    return 0 if report.passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
