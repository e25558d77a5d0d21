"""结构文件的解析与序列化。

格式（``#`` 之后为注释）::

    hyperfield K
    elements: 0 1
    one: 1
    add: 1 1 -> 0 1
    mul: 1 1 -> 1

第一个元素是加法单位元。``add`` 只对 0 所在的行列有缺省值 x ⊞ 0 = {x}；
``mul`` 对 0 与 1 所在的行列有缺省值。也可以用 ``builtin: NAME`` 或
``construct: product A B | wedge A B ... | layer M G [frobenius] | quotient K {u,v}``
指令代替表格，此时头部可省略。
"""

from __future__ import annotations

import dataclasses
import logging
from pathlib import Path

from ..errors import KernelError, StructureParseError, UnsupportedOperationError
from ..models.elemset import bits_of
from ..models.structure import STRUCTURE_KINDS, FiniteHyperStructure
from ..models.symbolic import SymbolicHyperfield
from . import catalog_service, construction_service, ordered_service

logger = logging.getLogger(__name__)

Structure = FiniteHyperStructure | SymbolicHyperfield

ARROW = "->"


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _resolve(token: str, base_dir: Path | None) -> Structure:
    """指令操作数：相对结构文件所在目录的路径，否则按内置名查找。"""

    if base_dir is not None:
        candidate = base_dir / token
        if candidate.is_file():
            return load_structure(candidate)
    return catalog_service.builtin(token)


def _finite_operand(token: str, base_dir: Path | None, line: int) -> FiniteHyperStructure:
    structure = _resolve(token, base_dir)
    if not isinstance(structure, FiniteHyperStructure):
        raise StructureParseError(f"{token} 不是有限结构", line)
    return structure


def _directive(keyword: str, body: str, base_dir: Path | None, line: int) -> Structure:
    try:
        if keyword == "builtin":
            return catalog_service.builtin(body)
        words = body.split()
        if not words:
            raise StructureParseError("construct 指令缺少构造名", line)
        kind, operands = words[0], words[1:]
        if kind == "product":
            if len(operands) != 2:
                raise StructureParseError("product 需要两个操作数", line)
            left, right = (_finite_operand(token, base_dir, line) for token in operands)
            return construction_service.product(left, right)
        if kind == "wedge":
            if not operands:
                raise StructureParseError("wedge 至少需要一层", line)
            layers = [_finite_operand(token, base_dir, line).additive() for token in operands]
            return construction_service.wedge_sum(layers, name=f"wedge({','.join(operands)})")
        if kind == "layer":
            if len(operands) not in (2, 3) or (len(operands) == 3 and operands[2] != "frobenius"):
                raise StructureParseError("layer 需要 M G [frobenius]", line)
            base = _finite_operand(operands[0], base_dir, line)
            group = ordered_service.parse_index(operands[1])
            action = catalog_service.frobenius(base) if len(operands) == 3 else None
            return construction_service.layering(base, group, action, name=f"layer({','.join(operands)})")
        if kind == "quotient":
            rest = body[len("quotient") :].strip()
            if "{" not in rest or not rest.endswith("}"):
                raise StructureParseError("quotient 需要 K {u1,u2,...}", line)
            field_token, members = rest.split("{", 1)
            field = _finite_operand(field_token.strip(), base_dir, line)
            names = [item.strip() for item in members[:-1].split(",") if item.strip()]
            subgroup = [field.index_of(item) for item in names]
            return construction_service.quotient(field, subgroup, name=f"{field.label}/{{{','.join(names)}}}")
        raise StructureParseError(f"未知的构造：{kind}", line)
    except StructureParseError:
        raise
    except KernelError as exc:
        raise StructureParseError(str(exc), line) from exc


def _rename(structure: Structure, name: str) -> Structure:
    if not name:
        return structure
    if isinstance(structure, SymbolicHyperfield):
        return dataclasses.replace(structure, name=name)
    return structure.renamed(structure.names, name=name)


def parse_structure(text: str, *, base_dir: Path | None = None) -> Structure:
    """解析结构文件；出错时抛出带行号的 StructureParseError。"""

    kind: str | None = None
    name = ""
    names: list[str] | None = None
    one: int | None = None
    add_cells: dict[tuple[int, int], int] = {}
    mul_cells: dict[tuple[int, int], int] = {}
    directive: Structure | None = None

    def element(token: str, line: int) -> int:
        if names is None:
            raise StructureParseError("elements: 必须出现在表格之前", line)
        try:
            return names.index(token)
        except ValueError:
            raise StructureParseError(f"未声明的元素 {token!r}", line) from None

    def cell(body: str, line: int) -> tuple[int, int, list[int]]:
        if ARROW not in body:
            raise StructureParseError(f"表格行缺少 {ARROW}", line)
        left, right = body.split(ARROW, 1)
        operands = left.split()
        if len(operands) != 2:
            raise StructureParseError("表格行左侧必须恰好两个元素", line)
        values = right.split()
        if not values:
            raise StructureParseError("和集不能为空", line)
        x, y = (element(token, line) for token in operands)
        return x, y, [element(token, line) for token in values]

    for number, raw in enumerate(str(text).splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        keyword, sep, body = line.partition(":")
        keyword = keyword.strip()
        body = body.strip()
        if not sep:
            words = line.split()
            if kind is not None or names is not None or words[0] not in STRUCTURE_KINDS:
                raise StructureParseError(f"无法识别的行：{line}", number)
            kind = words[0]
            name = " ".join(words[1:])
            continue
        if keyword in ("builtin", "construct"):
            if directive is not None or names is not None:
                raise StructureParseError("指令不能与表格或其他指令并存", number)
            directive = _directive(keyword, body, base_dir, number)
            continue
        if directive is not None:
            raise StructureParseError("指令不能与表格并存", number)
        if keyword == "elements":
            if names is not None:
                raise StructureParseError("elements: 重复", number)
            names = body.split()
            if not names:
                raise StructureParseError("elements: 不能为空", number)
            if len(set(names)) != len(names):
                raise StructureParseError("元素名重复", number)
        elif keyword == "one":
            if one is not None:
                raise StructureParseError("one: 重复", number)
            one = element(body, number)
        elif keyword == "add":
            x, y, values = cell(body, number)
            if (x, y) in add_cells:
                raise StructureParseError(f"重复的加法项 {names[x]} {names[y]}", number)
            mask = 0
            for z in values:
                mask |= 1 << z
            add_cells[(x, y)] = mask
        elif keyword == "mul":
            x, y, values = cell(body, number)
            if len(values) != 1:
                raise StructureParseError("乘积必须是单个元素", number)
            if (x, y) in mul_cells:
                raise StructureParseError(f"重复的乘法项 {names[x]} {names[y]}", number)
            mul_cells[(x, y)] = values[0]
        else:
            raise StructureParseError(f"未知的关键字 {keyword!r}", number)

    if directive is not None:
        return _rename(directive, name)
    if kind is None:
        raise StructureParseError("缺少头部 <kind> <name>", 1)
    if names is None:
        raise StructureParseError("缺少 elements:")
    n = len(names)

    add = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if (x, y) in add_cells:
                add[x][y] = add_cells[(x, y)]
            elif x == 0 or y == 0:
                add[x][y] = 1 << (x or y)
            else:
                raise StructureParseError(f"缺少加法项 add: {names[x]} {names[y]}")

    mul = None
    if kind == "hypergroup":
        if mul_cells or one is not None:
            raise StructureParseError("hypergroup 不能带乘法")
    else:
        if one is None:
            raise StructureParseError(f"{kind} 缺少 one:")
        mul = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                if (x, y) in mul_cells:
                    mul[x][y] = mul_cells[(x, y)]
                elif x == 0 or y == 0:
                    mul[x][y] = 0
                elif x == one:
                    mul[x][y] = y
                elif y == one:
                    mul[x][y] = x
                else:
                    raise StructureParseError(f"缺少乘法项 mul: {names[x]} {names[y]}")

    try:
        return FiniteHyperStructure(names=names, add=add, mul=mul, one_index=one, kind=kind, name=name)
    except KernelError as exc:
        raise StructureParseError(str(exc)) from exc


def _default_add(x: int, y: int) -> int | None:
    if x == 0 or y == 0:
        return 1 << (x or y)
    return None


def _default_mul(t: FiniteHyperStructure, x: int, y: int) -> int | None:
    if x == 0 or y == 0:
        return 0
    if x == t.one_index:
        return y
    if y == t.one_index:
        return x
    return None


def serialize_structure(structure: Structure) -> str:
    """规范文本：只写与缺省值不同的表格行。"""

    if isinstance(structure, SymbolicHyperfield):
        try:
            if catalog_service.builtin(structure.name) == structure:
                return f"builtin: {structure.name}\n"
        except KernelError:
            pass
        raise UnsupportedOperationError(f"{structure.label} 不是内置结构，无法写成文件")

    t = structure
    names = t.names
    lines = [f"{t.kind} {t.name}".rstrip(), "elements: " + " ".join(names)]
    if t.mul is not None:
        lines.append(f"one: {names[t.one_index]}")
    for x in range(t.n):
        for y in range(t.n):
            if t.add[x][y] != _default_add(x, y):
                members = " ".join(names[z] for z in bits_of(t.add[x][y]))
                lines.append(f"add: {names[x]} {names[y]} {ARROW} {members}")
    if t.mul is not None:
        for x in range(t.n):
            for y in range(t.n):
                if t.mul[x][y] != _default_mul(t, x, y):
                    lines.append(f"mul: {names[x]} {names[y]} {ARROW} {names[t.mul[x][y]]}")
    return "\n".join(lines) + "\n"


def load_structure(source: str | Path) -> Structure:
    """文件路径优先，否则按内置名查找。"""

    path = Path(source)
    if path.is_file():
        logger.debug("读取结构文件 %s", path)
        return parse_structure(path.read_text(encoding="utf-8"), base_dir=path.parent)
    return catalog_service.builtin(str(source))
