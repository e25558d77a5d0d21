"""严格超群与超域的分类流水线。

有限输入在整个载体上穷举；符号输入一律先取窗口上的有限加法表，
报告中回显所用窗口。
"""

from __future__ import annotations

import logging
from functools import cmp_to_key
from itertools import product
from typing import Callable, Iterator

from ..config import DEFAULT_WINDOW, LEX_WINDOW_RADIUS, ORDERING_CAPACITY
from ..errors import CapacityError, InvalidArgumentError, KernelError, PreconditionError, TheoremViolationError
from ..models.classification import (
    BaseKind,
    HyperringVerdict,
    LayerTag,
    LayeringExtraction,
    LessRelation,
    OrderedPartition,
    OrderingResult,
    PositiveCones,
    Valuation,
    WedgeDecomposition,
)
from ..models.elemset import bits_of
from ..models.ordered import OrderedIndex
from ..models.report import CheckReport, Violation
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import ZERO, Layered, SymbolicHyperfield, ZeroElement
from . import (
    catalog_service,
    construction_service,
    isomorphism_service,
    kernel_service,
    ordered_service,
    symbolic_service,
)

logger = logging.getLogger(__name__)

Structure = FiniteHyperStructure | SymbolicHyperfield


def default_window() -> tuple[int, int]:
    return ordered_service.parse_window(DEFAULT_WINDOW)


def _require_stringent_hypergroup(t: FiniteHyperStructure) -> None:
    if not kernel_service.is_hypergroup(t):
        raise PreconditionError(f"{t.label} 不是超群")
    stringent, witness = kernel_service.is_stringent(t)
    if not stringent:
        a, b = witness
        raise PreconditionError(f"{t.label} 不是严格的：{t.names[a]} ⊞ {t.names[b]} 不是单点集")


def less_relation(t: FiniteHyperStructure) -> LessRelation:
    """x <_F y 当且仅当 x ⊞ y = y ⊞ x = {y} 且 x ≠ y。"""

    _require_stringent_hypergroup(t)
    add = t.add
    pairs = frozenset(
        (x, y)
        for x in range(1, t.n)
        for y in range(1, t.n)
        if x != y and add[x][y] == 1 << y and add[y][x] == 1 << y
    )
    for x, y in pairs:
        for z in range(1, t.n):
            if (y, z) in pairs and (x, z) not in pairs:
                raise TheoremViolationError(f"{t.label} 上 <_F 不传递：{t.names[x]}, {t.names[y]}, {t.names[z]}")
    return LessRelation(n=t.n, pairs=pairs)


def sim_classes(t: FiniteHyperStructure, relation: LessRelation | None = None) -> OrderedPartition:
    """~_F 的等价类，按 <'_F 升序。"""

    relation = relation or less_relation(t)
    nonzero = range(1, t.n)
    buckets: dict[frozenset[int], None] = {}
    for x in nonzero:
        members = frozenset(y for y in nonzero if not relation.comparable(x, y))
        for y in members:
            other = frozenset(z for z in nonzero if not relation.comparable(y, z))
            if other != members:
                raise TheoremViolationError(f"{t.label} 上 ~_F 不是等价关系（{t.names[x]}, {t.names[y]}）")
        buckets[members] = None

    classes = [tuple(sorted(members)) for members in buckets]
    for left in classes:
        for right in classes:
            if left is right:
                continue
            verdicts = {relation.less(x, y) for x in left for y in right}
            if len(verdicts) != 1:
                raise TheoremViolationError(f"{t.label} 上 <_F 无法提升到等价类")

    def compare(left: tuple[int, ...], right: tuple[int, ...]) -> int:
        if left == right:
            return 0
        return -1 if relation.less(left[0], right[0]) else 1

    classes.sort(key=cmp_to_key(compare))
    for lower, upper in zip(classes, classes[1:]):
        if not relation.less(lower[0], upper[0]):
            raise TheoremViolationError(f"{t.label} 的类序不是全序")

    class_of = [-1] * t.n
    for position, members in enumerate(classes):
        for x in members:
            class_of[x] = position
    for x in nonzero:
        if class_of[t.neg[x]] != class_of[x]:
            raise TheoremViolationError(f"{t.label} 中 −{t.names[x]} 与 {t.names[x]} 不在同一类")
    return OrderedPartition(classes=tuple(classes), class_of=tuple(class_of))


def layer_at(t: FiniteHyperStructure, members: tuple[int, ...]) -> FiniteHyperStructure:
    """类 ∪ {0} 上的超群，x ⊞_g y = (x ⊞ y) ∩ 该层。"""

    carrier = [0] + [x for x in members if x != 0]
    position = {x: i for i, x in enumerate(carrier)}
    add = []
    for x in carrier:
        row = []
        for y in carrier:
            mask = 0
            for z in bits_of(t.add[x][y]):
                if z in position:
                    mask |= 1 << position[z]
            row.append(mask)
        add.append(row)
    return FiniteHyperStructure(
        names=[t.names[x] for x in carrier],
        add=add,
        kind="hypergroup",
        name=f"{t.label}|{t.names[carrier[1]] if len(carrier) > 1 else '0'}",
    )


def identify_layer(layer: FiniteHyperStructure) -> LayerTag:
    """依次尝试 𝕂、𝕊、群。"""

    additive = layer.additive()
    witness = isomorphism_service.find_isomorphism(additive, catalog_service.krasner().additive())
    if witness is not None:
        return LayerTag(kind="Krasner", order=additive.n, witness=witness)
    witness = isomorphism_service.find_isomorphism(additive, catalog_service.sign().additive())
    if witness is not None:
        return LayerTag(kind="Sign", order=additive.n, witness=witness)
    if kernel_service.is_single_valued(additive) and kernel_service.is_hypergroup(additive):
        return LayerTag(kind="Group", order=additive.n)
    raise PreconditionError(f"{layer.label} 既不同构于 𝕂、𝕊，也不是群")


def decompose_wedge(t: FiniteHyperStructure) -> WedgeDecomposition:
    """按类序取出各层并重建楔和，验证重建结果与源结构同构。"""

    partition = sim_classes(t)
    layers = [layer_at(t, members) for members in partition.classes]
    tags = [identify_layer(layer) for layer in layers]
    rebuilt = construction_service.wedge_sum(layers, name=f"wedge({t.label})", capacity=t.capacity)

    mapping = [0] * t.n
    offset = 1
    for members in partition.classes:
        for j, x in enumerate(members):
            mapping[x] = offset + j
        offset += len(members)
    iso = tuple(mapping)
    if not kernel_service.is_isomorphism(iso, t.additive(), rebuilt):
        found = isomorphism_service.find_isomorphism(t.additive(), rebuilt)
        if found is None:
            raise TheoremViolationError(f"{t.label} 与重建的楔和不同构")
        iso = found
    logger.info("%s 分解为 %s", t.label, [tag.label for tag in tags])
    return WedgeDecomposition(
        source=t.label,
        classes=partition.classes,
        layers=tuple(layers),
        tags=tuple(tags),
        rebuilt=rebuilt,
        iso=iso,
    )


def catalog_name(t: FiniteHyperStructure) -> str:
    """与 K、S 或 GF(q) 同构时返回内置名，否则返回自身标签。"""

    candidates = [catalog_service.krasner(), catalog_service.sign()]
    if t.mul is not None and kernel_service.is_single_valued(t):
        try:
            candidates.append(catalog_service.finite_field(t.n))
        except KernelError:
            pass
    if t.mul is None:
        candidates = [candidate.additive() for candidate in candidates]
    for candidate in candidates:
        if isomorphism_service.are_isomorphic(t, candidate):
            return candidate.label
    return t.label


def _base_kind(tag: LayerTag) -> BaseKind:
    return "Field" if tag.kind == "Group" else tag.kind


def _require_stringent_hyperfield(F: FiniteHyperStructure) -> None:
    if F.mul is None or not kernel_service.is_hyperfield(F):
        raise PreconditionError(f"{F.label} 不是超域")
    _require_stringent_hypergroup(F)


ClassTable = tuple[tuple[int | None, ...], ...]


def _class_group(
    label: str,
    partition: OrderedPartition,
    product: Callable[[int, int], int | None],
    unit: int,
) -> ClassTable:
    """把乘法提升到类上并验证成群、与序相容；积落在窗口外时记为 None。"""

    k = len(partition)
    table: list[list[int | None]] = [[None] * k for _ in range(k)]
    for i, left in enumerate(partition.classes):
        for j, right in enumerate(partition.classes):
            images = {product(x, y) for x in left for y in right}
            if len(images) != 1:
                raise TheoremViolationError(f"{label} 的类乘法不是良定义的")
            table[i][j] = images.pop()
    for i in range(k):
        if table[unit][i] != i or table[i][unit] != i:
            raise TheoremViolationError(f"{label} 的类幺半群没有单位元")
        if unit not in table[i] and None not in table[i]:
            raise TheoremViolationError(f"{label} 的类幺半群不是群")
        for j in range(i + 1, k):
            for m in range(k):
                for lower, upper in ((table[i][m], table[j][m]), (table[m][i], table[m][j])):
                    if lower is not None and upper is not None and not lower < upper:
                        raise TheoremViolationError(f"{label} 的类乘法与序不相容")
    return tuple(tuple(row) for row in table)


def _unit_layer(F: SymbolicHyperfield) -> FiniteHyperStructure:
    """从符号运算读出 1_G 层（连同 0）上的超域。"""

    identity = F.group.identity()
    carrier = [ZERO] + [Layered(u, identity) for u in F.units]
    position = {x: i for i, x in enumerate(carrier)}
    add = []
    mul = []
    for x in carrier:
        row = []
        products = []
        for y in carrier:
            result = symbolic_service.sym_add(x, y, F)
            mask = 1 if result.has_downset else 0
            for z in result.finite_part:
                if z in position:
                    mask |= 1 << position[z]
            row.append(mask)
            products.append(position[symbolic_service.sym_mul(x, y, F)])
        add.append(row)
        mul.append(products)
    return FiniteHyperStructure(
        names=F.base.names,
        add=add,
        mul=mul,
        one_index=position[F.one],
        kind="hyperfield",
        name=f"{F.label}@1",
    )


def _group_candidates(size: int, window: tuple[int, int]) -> Iterator[OrderedIndex]:
    yield OrderedIndex.trivial()
    yield OrderedIndex.integers()
    yield OrderedIndex.rationals()
    width = window[1] - window[0] + 1
    spread = 2 * LEX_WINDOW_RADIUS + 1
    arity = 2
    while spread > 1 and width * spread ** (arity - 1) <= size:
        yield OrderedIndex.lex(arity)
        arity += 1


def _identify_group(label: str, window: tuple[int, int], class_table: ClassTable, unit: int) -> OrderedIndex:
    """在同一窗口上找出运算表与类群表逐格一致的层群。"""

    size = len(class_table)
    for candidate in _group_candidates(size, window):
        layers = ordered_service.window(candidate, window[0], window[1])
        if len(layers) != size or layers[unit] != candidate.identity():
            continue
        position = {g: i for i, g in enumerate(layers)}
        if all(
            position.get(ordered_service.group_op(candidate, g, h)) == class_table[i][j]
            for i, g in enumerate(layers)
            for j, h in enumerate(layers)
        ):
            return candidate
    raise TheoremViolationError(f"{label} 的类群在窗口 {window[0]}..{window[1]} 上不是已知的全序群")


def extract_layering(F: Structure, window: tuple[int, int] | None = None) -> LayeringExtraction:
    """读出单位层 R_{1_G}、由类幺半群得到的层群 G 与投影 ψ。"""

    if isinstance(F, FiniteHyperStructure):
        _require_stringent_hyperfield(F)
        partition = sim_classes(F)
        unit = partition.class_of[F.one_index]
        class_table = _class_group(F.label, partition, lambda x, y: partition.class_of[F.mul[x][y]], unit)
        if len(class_table) != 1:
            raise TheoremViolationError(f"{F.label} 是有限的，层群却有 {len(class_table)} 个元素")
        tag = identify_layer(F)
        return LayeringExtraction(
            base=F,
            base_kind=_base_kind(tag),
            group=OrderedIndex.trivial(),
            projection={F.names[x]: () for x in range(1, F.n)},
            class_table=class_table,
            unit_class=unit,
        )

    window = window or default_window()
    if F.group.identity() not in symbolic_service.window_layers(F, window):
        raise PreconditionError(f"窗口 {window[0]}..{window[1]} 不含单位层")
    table = symbolic_service.window_table(F, window)
    _require_stringent_hypergroup(table.structure)
    partition = sim_classes(table.structure)
    if len(partition) != len(table.layers):
        raise TheoremViolationError(f"{F.label} 窗口上的类数与层数不一致")
    for members, layer in zip(partition.classes, table.layers):
        if {table.elements[x].layer for x in members} != {layer}:
            raise TheoremViolationError(f"{F.label} 的类与层 {layer} 不对应")

    position = {x: i for i, x in enumerate(table.elements)}

    def product(x: int, y: int) -> int | None:
        z = position.get(symbolic_service.sym_mul(table.elements[x], table.elements[y], F))
        return None if z is None else partition.class_of[z]

    unit = partition.class_of[position[F.one]]
    class_table = _class_group(F.label, partition, product, unit)
    group = _identify_group(F.label, window, class_table, unit)

    base = _unit_layer(F)
    tag = identify_layer(base)
    projection = {
        symbolic_service.format_element(x, F): x.layer for x in table.elements if isinstance(x, Layered)
    }
    return LayeringExtraction(
        base=base,
        base_kind=_base_kind(tag),
        group=group,
        projection=projection,
        window=window,
        truncated=table.truncated,
        class_table=class_table,
        unit_class=unit,
    )


def _density_expectation(F: SymbolicHyperfield) -> bool:
    kind = identify_layer(F.base).kind
    if kind in ("Krasner", "Sign"):
        return True
    return F.group.is_dense or F.group.is_trivial


def dd_criterion_stringent(F: Structure) -> bool:
    """(1 ⊞ −1)(1 ⊞ −1) = 1 ⊞ −1 ⊞ 1 ⊞ −1。"""

    if isinstance(F, FiniteHyperStructure):
        _require_stringent_hyperfield(F)
        one = F.one_index
        a = F.add[one][F.neg[one]]
        return F.set_product(a, a) == F.set_sum(a, a)

    one = F.one
    a = symbolic_service.sym_add(one, symbolic_service.sym_neg(one, F), F)
    verdict = symbolic_service.sym_set_mul(a, a, F) == symbolic_service.sym_set_add(a, a, F)
    expected = _density_expectation(F)
    if verdict != expected:
        logger.error("%s：集合代数给出 %s，层群稠密性判据给出 %s", F.label, verdict, expected)
        raise TheoremViolationError(f"{F.label} 的双重分配判据前后矛盾")
    return verdict


def is_real(F: FiniteHyperStructure) -> bool:
    """−1 ∉ R² ⊞ R²。"""

    squares = kernel_service.squares(F)
    return not F.set_sum(squares, squares) >> F.neg[F.one_index] & 1


def find_ordering(F: FiniteHyperStructure) -> OrderingResult:
    """穷举 P：P ⊞ P ⊆ P、PP ⊆ P、P ∪ −P = R、P ∩ −P = {0}。"""

    if F.n > ORDERING_CAPACITY:
        raise CapacityError(f"{F.label} 有 {F.n} 个元素，序的穷举上限为 {ORDERING_CAPACITY}")
    if F.mul is None or not kernel_service.is_hyperfield(F):
        raise PreconditionError(f"{F.label} 不是超域")

    real = is_real(F)
    neg = F.neg
    ordering = None
    if all(neg[x] != x for x in range(1, F.n)):
        pairs = sorted({(min(x, neg[x]), max(x, neg[x])) for x in range(1, F.n)})
        for choice in product(*pairs):
            cone = 1
            for x in choice:
                cone |= 1 << x
            if F.set_sum(cone, cone) & ~cone or F.set_product(cone, cone) & ~cone:
                continue
            ordering = bits_of(cone)
            break
    if (ordering is not None) != real:
        raise TheoremViolationError(f"{F.label}：存在序 = {ordering is not None}，实性 = {real}")
    return OrderingResult(ordering=ordering, is_real=real)


def positive_cones(F: SymbolicHyperfield, window: tuple[int, int] | None = None) -> PositiveCones:
    """以 𝕊 为基的分层：逐层选符号，回溯出窗口上的全部正锥。"""

    window = window or default_window()
    if identify_layer(F.base).kind != "Sign":
        raise PreconditionError(f"{F.label} 的基不是 𝕊")
    layers = symbolic_service.window_layers(F, window)
    identity = F.group.identity()
    anchor = layers.index(identity) if identity in layers else 0
    order = sorted(range(len(layers)), key=lambda i: (abs(i - anchor), i))
    layer_set = set(layers)
    choice: dict = {}
    cones = []

    def admissible(g) -> bool:
        x = Layered(choice[g], g)
        for h, sign in choice.items():
            y = Layered(sign, h)
            for left, right in ((x, y), (y, x)):
                value = symbolic_service.sym_mul(left, right, F)
                if value.layer in choice and choice[value.layer] != value.unit:
                    return False
                total = symbolic_service.sym_add(left, right, F)
                if total.has_downset:
                    return False
                for z in total.finite_part:
                    if isinstance(z, Layered) and z.layer in choice and choice[z.layer] != z.unit:
                        return False
        return True

    def search(depth: int) -> None:
        if depth == len(order):
            cones.append(tuple(Layered(choice[g], g) for g in layers))
            return
        g = layers[order[depth]]
        for unit in F.units:
            choice[g] = unit
            if admissible(g):
                search(depth + 1)
            del choice[g]

    search(0)
    if not cones:
        raise TheoremViolationError(f"{F.label} 在窗口 {window[0]}..{window[1]} 上没有正锥")

    split = True
    for cone in cones:
        if sorted({x.layer for x in cone}, key=lambda g: ordered_service.sort_key(F.group, g)) != layers:
            split = False
        members = set(cone)
        for x in cone:
            for y in cone:
                value = symbolic_service.sym_mul(x, y, F)
                if value.layer in layer_set and value not in members:
                    split = False
    if not split:
        raise TheoremViolationError(f"{F.label} 的正锥不能把 H 分裂为 𝕊^× × G")
    logger.info("%s 在窗口 %s..%s 上找到 %d 个正锥", F.label, window[0], window[1], len(cones))
    return PositiveCones(cones=tuple(cones), window=window, split_verified=split)


def reduce_hyperring(R: FiniteHyperStructure) -> HyperringVerdict:
    """严格超环要么是环，要么是严格超域。"""

    if R.mul is None or not kernel_service.check_skew_hyperring(R).passed:
        raise PreconditionError(f"{R.label} 不是超环")
    _require_stringent_hypergroup(R)
    if kernel_service.is_single_valued(R):
        return "Ring"
    for x in range(1, R.n):
        try:
            kernel_service.multiplicative_inverse(R, x)
        except InvalidArgumentError:
            logger.error("%s：%s 不可逆，但加法不是单值的", R.label, R.names[x])
            raise TheoremViolationError(f"{R.label} 既不是环也不是超域") from None
    return "Hyperfield"


def _valuation_violations(elements, value, multiply, add, dominant) -> Iterator[Violation]:
    for i, x in enumerate(elements):
        if (value(x) is None) != (i == 0):
            yield Violation(axiom="ValuationZero", witness=(i,))
        for j, y in enumerate(elements):
            if not multiply(i, j):
                yield Violation(axiom="ValuationMultiplicative", witness=(i, j))
            if dominant(i, j) and not add(i, j):
                yield Violation(axiom="ValuationDominance", witness=(i, j))


def valuation_of(F: Structure, window: tuple[int, int] | None = None) -> Valuation:
    """ν = ψ，并在全部（或窗口内的）元素对上验证赋值公理。"""

    extraction = extract_layering(F, window)
    if isinstance(F, FiniteHyperStructure):
        elements = list(range(F.n))
        group = OrderedIndex.trivial()

        def value(x):
            return None if x == 0 else ()

        def multiply(i, j):
            product_value = value(F.mul[i][j])
            if value(i) is None or value(j) is None:
                return product_value is None
            return product_value == ordered_service.group_op(group, value(i), value(j))

        def add(i, j):
            return F.add[i][j] == 1 << i

        names = {F.names[x]: "-inf" if x == 0 else "()" for x in elements}
    else:
        window = extraction.window
        group = F.group
        elements = symbolic_service.window_elements(F, window)

        def value(x):
            return None if isinstance(x, ZeroElement) else x.layer

        def multiply(i, j):
            x, y = elements[i], elements[j]
            product_value = value(symbolic_service.sym_mul(x, y, F))
            if value(x) is None or value(y) is None:
                return product_value is None
            return product_value == ordered_service.group_op(group, value(x), value(y))

        def add(i, j):
            x, y = elements[i], elements[j]
            return symbolic_service.sym_add(x, y, F) == symbolic_service.singleton(x, F)

        names = {
            symbolic_service.format_element(x, F): (
                "-inf" if isinstance(x, ZeroElement) else ordered_service.format_element(group, x.layer)
            )
            for x in elements
        }

    def dominant(i, j):
        vi = value(elements[i])
        vj = value(elements[j])
        if vi is None:
            return False
        return vj is None or ordered_service.less(group, vj, vi)

    report = kernel_service.collect_violations(_valuation_violations(elements, value, multiply, add, dominant))
    return Valuation(
        values=names,
        kernel=extraction.base,
        kernel_kind=extraction.base_kind,
        report=report,
        pairs_checked=len(elements) ** 2,
        window=extraction.window,
    )


def _additive_identity_violations(t: FiniteHyperStructure) -> Iterator[Violation]:
    relation = less_relation(t)
    partition = sim_classes(t, relation)
    add = t.add
    neg = t.neg
    n = t.n

    for x in range(n):
        for y in range(n):
            if add[x][y] >> y & 1 and not add[y][x] >> y & 1:
                yield Violation(axiom="ReverseAbsorption", witness=(x, y))

    for x, y in relation.pairs:
        for a, b in ((neg[x], neg[y]), (x, neg[y]), (neg[x], y)):
            if not relation.less(a, b):
                yield Violation(axiom="NegationMonotone", witness=(x, y))
        for z in range(1, n):
            if not relation.less(x, z) and not relation.less(z, y):
                yield Violation(axiom="Interpolation", witness=(x, y, z))

    for x in range(1, n):
        if partition.class_of[neg[x]] != partition.class_of[x]:
            yield Violation(axiom="NegationClass", witness=(x,))

    for x in range(1, n):
        for y in range(1, n):
            if y == neg[x]:
                continue
            for z in range(1, n):
                if z == neg[y] or z == neg[x]:
                    continue
                if t.set_sum(add[x][y], 1 << z) & 1:
                    if len({partition.class_of[x], partition.class_of[y], partition.class_of[z]}) != 1:
                        yield Violation(axiom="ZeroSumClass", witness=(x, y, z))

    for z in range(1, n):
        below = [0] + [x for x in range(1, n) if relation.less(x, z)]
        for x in below:
            for y in below:
                for w in bits_of(add[x][y]):
                    if w and not relation.less(w, z):
                        yield Violation(axiom="DownwardClosedSums", witness=(x, y, z))

    layers = [layer_at(t, members) for members in partition.classes]
    if t.mul is not None and kernel_service.is_hyperfield(t):
        for position, layer in enumerate(layers[1:], start=1):
            if isomorphism_service.find_isomorphism(layer, layers[0]) is None:
                yield Violation(axiom="LayerIsomorphism", witness=(partition.classes[position][0],))
        if identify_layer(t).kind == "Sign":
            signs = {t.one_index, neg[t.one_index]}
            for a in range(1, n):
                if a not in signs and t.mul[a][a] in signs:
                    yield Violation(axiom="SignSquares", witness=(a,))


def _symbolic_identity_violations(F: SymbolicHyperfield, window: tuple[int, int]) -> Iterator[Violation]:
    table = symbolic_service.window_table(F, window)
    yield from _additive_identity_violations(table.structure)

    partition = sim_classes(table.structure)
    layers = [layer_at(table.structure, members) for members in partition.classes]
    for position, layer in enumerate(layers[1:], start=1):
        if isomorphism_service.find_isomorphism(layer, layers[0]) is None:
            yield Violation(axiom="LayerIsomorphism", witness=(partition.classes[position][0],))

    if identify_layer(F.base).kind == "Sign":
        one = F.one
        signs = {one, symbolic_service.sym_neg(one, F)}
        for i, a in enumerate(table.elements):
            if isinstance(a, ZeroElement) or a in signs:
                continue
            if symbolic_service.sym_mul(a, a, F) in signs:
                yield Violation(axiom="SignSquares", witness=(i,))


def identity_audit(F: Structure, window: tuple[int, int] | None = None) -> CheckReport:
    """对严格结构逐条穷举序与层的结构性质；符号输入在窗口上检查。"""

    if isinstance(F, FiniteHyperStructure):
        return kernel_service.collect_violations(_additive_identity_violations(F))
    return kernel_service.collect_violations(_symbolic_identity_violations(F, window or default_window()))
