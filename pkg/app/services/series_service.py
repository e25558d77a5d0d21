"""惰性级数的运算、递归求逆，以及把 (斜) 域的商实现为严格超域的商映射。"""

from __future__ import annotations

import logging
import operator
import random
import re
from fractions import Fraction
from math import lcm
from typing import Callable, Iterator, Literal

from ..config import DEFAULT_DEPTH, DEFAULT_SEED, SERIES_SEARCH_LIMIT
from ..errors import (
    DivisionByZeroError,
    InvalidArgumentError,
    PreconditionError,
    UnsupportedOperationError,
)
from ..models.ordered import OrderedIndex
from ..models.report import CheckReport, SampleCheckReport, Violation
from ..models.series import LazySeries, LeadingTerm, Position, SeriesRing, SupportFrontier
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import ZERO, Layered, SymbolicHyperfield, SymElement, ZeroElement
from . import catalog_service, construction_service, kernel_service, ordered_service, symbolic_service

logger = logging.getLogger(__name__)

QuotientMode = Literal["Krasner", "Sign", "Field"]

EXPONENT_PATTERN = re.compile(r"^-?\d+(?:/\d+)?$")


def series_ring(base: str | FiniteHyperStructure = "Q", *, twisted: bool = False) -> SeriesRing:
    """``Q`` 为有理数；否则为有限域（``twisted`` 时带 Frobenius）。"""

    if isinstance(base, str):
        if base.strip() == "Q":
            if twisted:
                raise InvalidArgumentError("有理数系数没有 Frobenius 扭曲")
            return SeriesRing(kind="rational")
        base = catalog_service.finite_builtin(base)
    if base.mul is None or not kernel_service.is_single_valued(base) or not kernel_service.is_hyperfield(base):
        raise PreconditionError(f"{base.label} 不是域，不能作系数环")
    inverses = tuple(0 if x == 0 else kernel_service.multiplicative_inverse(base, x) for x in range(base.n))
    action = catalog_service.frobenius(base) if twisted else None
    return SeriesRing(kind="field", field=base, action=action, inverses=inverses)


def _require_group(group: OrderedIndex) -> None:
    if group.variant not in ("Z", "Q"):
        raise UnsupportedOperationError(f"{group.label} 上的支撑边界不是有限生成的格，仅支持 Z 与 Q")


def _times(ring: SeriesRing, g: Position) -> int:
    """扭曲作用的次数 n(g)。"""

    if not ring.is_twisted:
        return 0
    if Fraction(g).denominator != 1:
        raise UnsupportedOperationError("扭曲级数只支持整数指数")
    return int(g)


def _check_compatible(p: LazySeries, q: LazySeries) -> None:
    if p.ring != q.ring or p.group != q.group:
        raise InvalidArgumentError(f"级数不兼容：{p.ring.label}/{p.group.label} 与 {q.ring.label}/{q.group.label}")


def _exponent(group: OrderedIndex, text: str) -> Position:
    value = ordered_service.parse_element(group, text)
    if group.variant == "Z":
        return value
    return Fraction(value)


def _lattice_denominator(g: Position) -> int:
    return Fraction(g).denominator


def zero_series(ring: SeriesRing, group: OrderedIndex) -> LazySeries:
    _require_group(group)
    return LazySeries(ring, group, None, lambda g: ring.zero, label="0")


def from_terms(ring: SeriesRing, group: OrderedIndex, terms: dict[Position, object], *, label: str = "") -> LazySeries:
    """有限支撑的级数。"""

    _require_group(group)
    support = {g: value for g, value in terms.items() if not ring.is_zero(value)}
    if not support:
        return zero_series(ring, group)
    top = max(support)
    denominator = 1
    for g in support:
        denominator = lcm(denominator, _lattice_denominator(g))
    frontier = SupportFrontier(top=top, denominator=denominator)
    return LazySeries(ring, group, frontier, lambda g: support.get(g, ring.zero), label=label, bottom=min(support))


def monomial(ring: SeriesRing, group: OrderedIndex, coefficient, position: Position) -> LazySeries:
    return from_terms(ring, group, {position: coefficient})


def one_series(ring: SeriesRing, group: OrderedIndex) -> LazySeries:
    return monomial(ring, group, ring.one, group.identity())


def _parse_coefficient(ring: SeriesRing, text: str):
    raw = text.strip()
    if not raw:
        return ring.one
    if ring.kind == "rational":
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise InvalidArgumentError(f"无法解析有理系数 {raw!r}") from None
    if raw.startswith("[") and raw.endswith("]"):
        raw = raw[1:-1].strip()
    if raw in ring.field.names:
        return ring.field.index_of(raw)
    if raw.isdigit():
        value = ring.zero
        for _ in range(int(raw)):
            value = ring.add(value, ring.one)
        return value
    raise InvalidArgumentError(f"{ring.label} 中没有元素 {raw!r}")


def _split_terms(text: str) -> Iterator[tuple[bool, str]]:
    depth = 0
    negative = False
    current = ""
    previous = ""
    for char in text:
        if char == "[":
            depth += 1
        elif char == "]":
            depth -= 1
        if char in "+-" and depth == 0 and previous != "^":
            if current.strip():
                yield negative, current.strip()
                negative = False
            current = ""
            if char == "-":
                negative = not negative
            previous = char
            continue
        current += char
        if not char.isspace():
            previous = char
    if current.strip():
        yield negative, current.strip()


def parse_series(text: str, ring: SeriesRing, group: OrderedIndex) -> LazySeries:
    """解析 ``1 + x^-1 + 2x^3/2`` 形式的有限和；含 + 或 - 的域元素名写在方括号里。"""

    _require_group(group)
    terms: dict[Position, object] = {}
    for negative, term in _split_terms(str(text or "")):
        cut = term.rfind("x")
        if cut >= 0 and "]" not in term[cut:]:
            coefficient_text = term[:cut]
            rest = term[cut + 1 :].strip()
            if not rest:
                position = _exponent(group, "1")
            elif rest.startswith("^") and EXPONENT_PATTERN.match(rest[1:].strip()):
                position = _exponent(group, rest[1:].strip())
            else:
                raise InvalidArgumentError(f"无法解析的项 {term!r}")
        else:
            coefficient_text = term
            position = group.identity()
        coefficient = _parse_coefficient(ring, coefficient_text.strip().rstrip("*"))
        if negative:
            coefficient = ring.neg(coefficient)
        previous = terms.get(position, ring.zero)
        terms[position] = ring.add(previous, coefficient)
    return from_terms(ring, group, terms, label=str(text).strip())


def _format_monomial(ring: SeriesRing, group: OrderedIndex, g: Position, value) -> str:
    if g == 0:
        return ring.format(value)
    power = "x" if g == 1 else f"x^{ordered_service.format_element(group, g)}"
    if value == ring.one:
        return power
    return f"{ring.format(value)}{power}"


def format_series(p: LazySeries, depth: int = DEFAULT_DEPTH) -> str:
    """前 depth 个位置内的非零项；之后还有位置时以 ``…`` 结尾。"""

    terms = p.terms(depth)
    if not terms:
        return "0" if p.is_zero_series else "0 + …"
    ring = p.ring
    parts = []
    for g, value in terms:
        negative = ring.kind == "rational" and value < 0
        text = _format_monomial(ring, p.group, g, -value if negative else value)
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts) + " + …"


def _merge(a: SupportFrontier | None, b: SupportFrontier | None) -> SupportFrontier | None:
    if a is None:
        return b
    if b is None:
        return a
    return SupportFrontier(top=max(a.top, b.top), denominator=lcm(a.denominator, b.denominator))


def _lower(p: LazySeries, q: LazySeries, combine: Callable) -> Position | None:
    """两个有限支撑的下界合成新的下界；任一方无界（或为零）时为 None。"""

    if p.frontier is None:
        return q.bottom
    if q.frontier is None:
        return p.bottom
    if p.bottom is None or q.bottom is None:
        return None
    return combine(p.bottom, q.bottom)


def series_add(p: LazySeries, q: LazySeries) -> LazySeries:
    _check_compatible(p, q)
    ring = p.ring
    frontier = _merge(p.frontier, q.frontier)
    if frontier is None:
        return zero_series(ring, p.group)
    return LazySeries(
        ring,
        p.group,
        frontier,
        lambda g: ring.add(p.coeff(g), q.coeff(g)),
        label=f"({p.label})+({q.label})",
        bottom=_lower(p, q, min),
    )


def series_neg(p: LazySeries) -> LazySeries:
    ring = p.ring
    if p.frontier is None:
        return p
    return LazySeries(
        ring, p.group, p.frontier, lambda g: ring.neg(p.coeff(g)), label=f"-({p.label})", bottom=p.bottom
    )


def series_mul(p: LazySeries, q: LazySeries) -> LazySeries:
    """柯西卷积 (pq)(s) = Σ_{g+h=s} p(g)·σ^g(q(h))；每个系数只涉及有限项。"""

    _check_compatible(p, q)
    ring = p.ring
    if p.frontier is None or q.frontier is None:
        return zero_series(ring, p.group)
    fp = p.frontier
    fq = q.frontier
    frontier = SupportFrontier(top=fp.top + fq.top, denominator=lcm(fp.denominator, fq.denominator))

    def rule(s: Position):
        total = ring.zero
        k = 0
        while True:
            g = fp.position(k)
            h = s - g
            if h > fq.top:
                break
            k += 1
            if not fq.contains(h):
                continue
            a = p.coeff(g)
            if ring.is_zero(a):
                continue
            b = q.coeff(h)
            if ring.is_zero(b):
                continue
            total = ring.add(total, ring.mul(a, ring.twist(b, _times(ring, g))))
        return total

    return LazySeries(
        ring, p.group, frontier, rule, label=f"({p.label})·({q.label})", bottom=_lower(p, q, operator.add)
    )


def leading_term(p: LazySeries, limit: int = SERIES_SEARCH_LIMIT) -> LeadingTerm | None:
    """从边界顶端往下找第一个非零系数；limit 个位置内全为零时返回 None。"""

    if p.frontier is None:
        return None
    for k in range(limit):
        g = p.frontier.position(k)
        value = p.coeff(g)
        if not p.ring.is_zero(value):
            return LeadingTerm(position=g, coefficient=value, offset=k)
    return None


def _monomial_inverse(ring: SeriesRing, group: OrderedIndex, lead: LeadingTerm) -> LazySeries:
    """(a x^g)⁻¹ = σ^{-g}(a⁻¹) x^{-g}。"""

    t = lead.position
    coefficient = ring.twist(ring.inv(lead.coefficient), -_times(ring, t))
    return monomial(ring, group, coefficient, -t)


def series_inv(p: LazySeries) -> LazySeries:
    """p = p₁·p₂，p₂ 为首项单项式、p₁ 首项为 1·x^0；返回 p₂⁻¹·p₁⁻¹。"""

    lead = leading_term(p)
    if lead is None:
        if p.support_within(SERIES_SEARCH_LIMIT):
            raise DivisionByZeroError("零级数没有逆元")
        raise DivisionByZeroError(f"级数在前 {SERIES_SEARCH_LIMIT} 个位置内全为零，按零处理")
    ring = p.ring
    group = p.group
    p2_inv = _monomial_inverse(ring, group, lead)
    p1 = series_mul(p, p2_inv)
    f1 = SupportFrontier(top=group.identity(), denominator=p1.frontier.denominator)

    q: LazySeries

    def rule(s: Position):
        if s == 0:
            return ring.one
        total = ring.zero
        k = 1
        while True:
            g = f1.position(k)
            if g < s:
                break
            k += 1
            a = p1.coeff(g)
            if ring.is_zero(a):
                continue
            b = q.coeff(s - g)
            if ring.is_zero(b):
                continue
            total = ring.add(total, ring.mul(a, ring.twist(b, _times(ring, g))))
        return ring.neg(total)

    q = LazySeries(ring, group, f1, rule, label=f"inv1({p.label})")
    result = series_mul(p2_inv, q)
    result.label = f"inv({p.label})"
    return result


def series_eq_depth(p: LazySeries, q: LazySeries, depth: int = DEFAULT_DEPTH) -> bool:
    """在合并边界的前 depth 个位置上比较系数（半可判定的相等）。"""

    if depth < 1:
        raise InvalidArgumentError("比较深度至少为 1")
    _check_compatible(p, q)
    frontier = _merge(p.frontier, q.frontier)
    if frontier is None:
        return True
    return all(p.coeff(frontier.position(k)) == q.coeff(frontier.position(k)) for k in range(depth))


def _random_coefficient(ring: SeriesRing, rng: random.Random, *, nonzero: bool = False):
    if ring.kind == "rational":
        numerator = 0
        while numerator == 0:
            numerator = rng.randint(-9, 9)
            if not nonzero and rng.random() < 0.3:
                return ring.zero
        return Fraction(numerator, rng.randint(1, 4))
    low = 1 if nonzero else 0
    return rng.randrange(low, ring.field.n)


def random_series(
    ring: SeriesRing,
    group: OrderedIndex,
    seed: int | str = DEFAULT_SEED,
    *,
    top: Position = 0,
    denominator: int = 1,
) -> LazySeries:
    """无限支撑的随机级数，首项非零；位置 g 的系数只由 (seed, g) 决定。"""

    _require_group(group)
    frontier = SupportFrontier(top=top, denominator=denominator)

    def rule(g: Position):
        rng = random.Random(f"{seed}:{g}")
        return _random_coefficient(ring, rng, nonzero=g == top)

    return LazySeries(ring, group, frontier, rule, label=f"random({seed})")


def check_ring_laws(
    ring: SeriesRing,
    group: OrderedIndex,
    *,
    trials: int = 100,
    depth: int = DEFAULT_DEPTH,
    seed: int = DEFAULT_SEED,
) -> CheckReport:
    """随机三元组上的加法交换/结合、乘法结合与两侧分配律（深度有界）。"""

    violations = []
    for trial in range(trials):
        p, q, r = (random_series(ring, group, f"{seed}:{trial}:{slot}", top=-slot) for slot in range(3))
        laws = {
            "AdditiveCommutativity": (series_add(p, q), series_add(q, p)),
            "AdditiveAssociativity": (series_add(series_add(p, q), r), series_add(p, series_add(q, r))),
            "MultiplicativeAssociativity": (series_mul(series_mul(p, q), r), series_mul(p, series_mul(q, r))),
            "LeftDistributivity": (series_mul(p, series_add(q, r)), series_add(series_mul(p, q), series_mul(p, r))),
            "RightDistributivity": (series_mul(series_add(q, r), p), series_add(series_mul(q, p), series_mul(r, p))),
        }
        if not ring.is_twisted:
            laws["MultiplicativeCommutativity"] = (series_mul(p, q), series_mul(q, p))
        for axiom, (left, right) in laws.items():
            if not series_eq_depth(left, right, depth):
                violations.append(Violation(axiom=axiom, witness=(trial,), detail=f"seed={seed}, depth={depth}"))
    if not violations:
        logger.warning("级数环律只在深度 %d 内成立（%d 组随机三元组）", depth, trials)
    return kernel_service.collect_violations(iter(violations))


def check_inversion(
    ring: SeriesRing,
    group: OrderedIndex,
    *,
    trials: int = 100,
    depth: int = DEFAULT_DEPTH,
    seed: int = DEFAULT_SEED,
) -> CheckReport:
    """p·p⁻¹ 与 p⁻¹·p 在前 depth 个位置上等于 1。"""

    one = one_series(ring, group)
    violations = []
    for trial in range(trials):
        p = random_series(ring, group, f"{seed}:{trial}", top=trial % 5 - 2)
        inverse = series_inv(p)
        if not series_eq_depth(series_mul(p, inverse), one, depth):
            violations.append(Violation(axiom="RightInverse", witness=(trial,), detail=f"seed={seed}, depth={depth}"))
        if not series_eq_depth(series_mul(inverse, p), one, depth):
            violations.append(Violation(axiom="LeftInverse", witness=(trial,), detail=f"seed={seed}, depth={depth}"))
    return kernel_service.collect_violations(iter(violations))


def quotient_target(ring: SeriesRing, group: OrderedIndex, mode: QuotientMode) -> SymbolicHyperfield:
    """商 K^×/U 对应的分层超域：𝕂⋊G、𝕊⋊G 或 M⋊G（扭曲时带同一个 σ）。"""

    _require_group(group)
    if mode == "Krasner":
        return construction_service.layering(catalog_service.krasner(), group, name=f"K⋊{group.label}")
    if mode == "Sign":
        if ring.kind != "rational":
            raise PreconditionError("符号商要求有序的系数域（Q）")
        return construction_service.layering(catalog_service.sign(), group, name=f"S⋊{group.label}")
    if mode == "Field":
        if ring.kind != "field":
            raise PreconditionError("域商要求有限域系数")
        return construction_service.layering(ring.field, group, ring.action)
    raise InvalidArgumentError(f"未知的商模式：{mode!r}")


def quotient_class(p: LazySeries, mode: QuotientMode) -> SymElement:
    """[p] 由首项数据决定：𝕂 取 m_p，𝕊 取 (p(m_p) 的符号, m_p)，域取 (p(m_p), m_p)。"""

    lead = leading_term(p)
    if lead is None:
        if not p.support_within(SERIES_SEARCH_LIMIT):
            logger.warning("%s 在前 %d 个位置内全为零，按零处理", p.label, SERIES_SEARCH_LIMIT)
        return ZERO
    if mode == "Krasner":
        return Layered(1, lead.position)
    if mode == "Sign":
        if p.ring.kind != "rational":
            raise PreconditionError("符号商要求有序的系数域（Q）")
        return Layered(1 if lead.coefficient > 0 else 2, lead.position)
    if mode == "Field":
        return Layered(lead.coefficient, lead.position)
    raise InvalidArgumentError(f"未知的商模式：{mode!r}")


def _representative_lead(ring: SeriesRing, mode: QuotientMode, x: Layered, rng: random.Random):
    if mode == "Field":
        return x.unit
    if mode == "Sign":
        magnitude = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        return magnitude if x.unit == 1 else -magnitude
    return _random_coefficient(ring, rng, nonzero=True)


def random_representative(
    x: SymElement,
    ring: SeriesRing,
    group: OrderedIndex,
    mode: QuotientMode,
    rng: random.Random,
    depth: int,
) -> LazySeries:
    """首项数据固定为 x、其余 depth-1 个较低位置随机的有限支撑代表元。"""

    if isinstance(x, ZeroElement):
        return zero_series(ring, group)
    step = 1 if group.variant == "Z" else Fraction(1, 2)
    terms: dict[Position, object] = {x.layer: _representative_lead(ring, mode, x, rng)}
    for k in range(1, depth):
        terms[x.layer - k * step] = _random_coefficient(ring, rng)
    return from_terms(ring, group, terms)


def quotient_sample_check(
    x: SymElement,
    y: SymElement,
    ring: SeriesRing,
    group: OrderedIndex,
    mode: QuotientMode,
    *,
    trials: int = 1000,
    depth: int = DEFAULT_DEPTH,
    seed: int = DEFAULT_SEED,
) -> SampleCheckReport:
    """随机代表元之和的类必须落在 x ⊞ y 内，并统计对期望有限部分的覆盖。"""

    target = quotient_target(ring, group, mode)
    x = symbolic_service.validate_element(x, target)
    y = symbolic_service.validate_element(y, target)
    expected = symbolic_service.sym_add(x, y, target)
    expected_finite = [symbolic_service.format_element(z, target) for z in expected.finite_part]

    observed: dict[str, int] = {}
    outside: list[str] = []
    downset_hits = 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        p = random_representative(x, ring, group, mode, rng, depth)
        q = random_representative(y, ring, group, mode, rng, depth)
        cls = quotient_class(series_add(p, q), mode)
        label = symbolic_service.format_element(cls, target)
        observed[label] = observed.get(label, 0) + 1
        if not symbolic_service.contains(expected, cls, target):
            if label not in outside:
                outside.append(label)
        elif label not in expected_finite:
            downset_hits += 1

    covered = [label for label in expected_finite if label in observed]
    if outside:
        logger.error("%s：%d 个样本类落在 %s 之外", target.label, len(outside), symbolic_service.format_description(expected, target))
    return SampleCheckReport(
        mode=mode,
        x=symbolic_service.format_element(x, target),
        y=symbolic_service.format_element(y, target),
        trials=trials,
        depth=depth,
        seed=seed,
        expected=symbolic_service.format_description(expected, target),
        observed=observed,
        outside=outside,
        expected_finite=expected_finite,
        covered_finite=covered,
        downset_hits=downset_hits,
    )
