"""小规模超群 / 超域 / 超环的穷举，结果按规范形去重。

超群按超逆对合 ν 的类型分组；"x ∈ y ⊞ z" 的三元组在可逆性与可反转性
生成的映射下分成若干轨道，每个轨道整体进或出。按轨道回溯，
加法表的格一旦确定就检查非空、严格性与结合律。
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

from ..config import ENUM_WORKERS, HYPERFIELD_ENUM_LIMIT, HYPERGROUP_ENUM_LIMIT, HYPERRING_ENUM_LIMIT
from ..errors import CapacityError, InvalidArgumentError, TheoremViolationError
from ..models.canonical import CanonicalForm
from ..models.elemset import bits_of
from ..models.structure import FiniteHyperStructure
from . import catalog_service, isomorphism_service, kernel_service

logger = logging.getLogger(__name__)

PREFIX_ORBITS = 4

Table = tuple[tuple[int, ...], ...]


def _check_size(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise InvalidArgumentError("规模至少为 1")
    if n > limit:
        raise CapacityError(f"{what}的穷举上限为 {limit}，收到 {n}")


def _run_tasks(function: Callable, tasks: list, workers: int) -> list:
    """workers 为 1 时在本进程串行；0 表示按 CPU 数量开进程。"""

    if workers == 1 or len(tasks) <= 1:
        return [function(task) for task in tasks]
    max_workers = workers or os.cpu_count() or 1
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(function, tasks, chunksize=max(1, len(tasks) // (4 * max_workers))))


def _dedupe(structures: Iterable[FiniteHyperStructure]) -> list[CanonicalForm]:
    seen: dict[tuple, CanonicalForm] = {}
    for t in structures:
        form = isomorphism_service.canonical_form(t)
        seen.setdefault(form.key, form)
    return [seen[key] for key in sorted(seen)]


def _names(n: int) -> list[str]:
    return [str(i) for i in range(n)]


# ---- 超群 ----


def _involutions(n: int) -> Iterable[tuple[int, ...]]:
    """非零元上的对合，按不动点个数取每种共轭类型的一个代表。"""

    m = n - 1
    for fixed in range(m, -1, -1):
        if (m - fixed) % 2:
            continue
        nu = list(range(n))
        for k in range(fixed + 1, n, 2):
            nu[k], nu[k + 1] = k + 1, k
        yield tuple(nu)


def _triple_images(triple: tuple[int, int, int], nu: Sequence[int], commutative: bool):
    x, y, z = triple
    yield y, x, nu[z]
    yield z, nu[y], x
    yield nu[x], nu[z], nu[y]
    if commutative:
        yield x, z, y


def _triple_orbits(n: int, nu: Sequence[int], commutative: bool) -> list[tuple[tuple[int, int, int], ...]]:
    seen: set[tuple[int, int, int]] = set()
    orbits = []
    for start in product(range(1, n), repeat=3):
        if start in seen:
            continue
        seen.add(start)
        orbit = [start]
        stack = [start]
        while stack:
            for image in _triple_images(stack.pop(), nu, commutative):
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
                    stack.append(image)
        orbits.append(tuple(orbit))
    return orbits


def _assoc_state(cells, complete, a: int, b: int, c: int) -> bool | None:
    """(a ⊞ b) ⊞ c 与 a ⊞ (b ⊞ c) 是否相等；涉及未定格时为 None。"""

    if not complete[a][b] or not complete[b][c]:
        return None
    left = 0
    for w in bits_of(cells[a][b]):
        if not complete[w][c]:
            return None
        left |= cells[w][c]
    right = 0
    for w in bits_of(cells[b][c]):
        if not complete[a][w]:
            return None
        right |= cells[a][w]
    return left == right


def _hypergroup_worker(task) -> list[Table]:
    n, nu, commutative, stringent, prefix = task
    width = n - 1
    orbits = sorted(
        _triple_orbits(n, nu, commutative),
        key=lambda orbit: max((y - 1) * width + (z - 1) for _, y, z in orbit),
    )

    # 每个格在触及它的最后一个轨道赋值之后才确定
    last: dict[tuple[int, int], int] = {}
    for position, orbit in enumerate(orbits):
        for _, y, z in orbit:
            last[(y, z)] = max(last.get((y, z), -1), position)
    completes: list[list[tuple[int, int]]] = [[] for _ in orbits]
    for cell, position in last.items():
        completes[position].append(cell)

    cells = [[0] * n for _ in range(n)]
    complete = [[False] * n for _ in range(n)]
    for y in range(n):
        cells[0][y] = 1 << y
        cells[y][0] = 1 << y
        complete[0][y] = complete[y][0] = True
    for y in range(1, n):
        cells[y][nu[y]] |= 1

    results: list[Table] = []

    def cell_ok(y: int, z: int) -> bool:
        if z == nu[y]:
            return True
        nonzero = cells[y][z] & ~1
        if not nonzero:
            return False
        return not stringent or nonzero.bit_count() == 1

    def search(i: int, pending: list[tuple[int, int, int]]) -> None:
        if i == len(orbits):
            table = tuple(tuple(row) for row in cells)
            if kernel_service.is_hypergroup(FiniteHyperStructure(names=_names(n), add=table)):
                results.append(table)
            return
        choices = (prefix[i],) if i < len(prefix) else (False, True)
        for choice in choices:
            if choice:
                for x, y, z in orbits[i]:
                    cells[y][z] ^= 1 << x
            for y, z in completes[i]:
                complete[y][z] = True
            valid = all(cell_ok(y, z) for y, z in completes[i])
            keep = pending
            if valid and completes[i]:
                keep = []
                for a, b, c in pending:
                    state = _assoc_state(cells, complete, a, b, c)
                    if state is None:
                        keep.append((a, b, c))
                    elif not state:
                        valid = False
                        break
            if valid:
                search(i + 1, keep)
            for y, z in completes[i]:
                complete[y][z] = False
            if choice:
                for x, y, z in orbits[i]:
                    cells[y][z] ^= 1 << x

    search(0, list(product(range(1, n), repeat=3)))
    return results


def enumerate_hypergroups(
    n: int,
    *,
    stringent: bool = False,
    commutative: bool = False,
    workers: int = ENUM_WORKERS,
) -> list[CanonicalForm]:
    """n 元超群的全部同构类（按规范形键排序）。"""

    _check_size(n, HYPERGROUP_ENUM_LIMIT, "超群")
    tasks = []
    for nu in _involutions(n):
        count = len(_triple_orbits(n, nu, commutative))
        split = min(PREFIX_ORBITS, count)
        for prefix in product((False, True), repeat=split):
            tasks.append((n, nu, commutative, stringent, prefix))
    logger.info("枚举 %d 元超群：%d 个任务", n, len(tasks))
    tables = [table for batch in _run_tasks(_hypergroup_worker, tasks, workers) for table in batch]
    forms = _dedupe(
        FiniteHyperStructure(names=_names(n), add=table, name=f"H{n}") for table in tables
    )
    forms = [
        CanonicalForm(key=form.key, structure=form.structure.renamed(_names(n), name=f"H{n}.{i}"), perm=form.perm)
        for i, form in enumerate(forms)
    ]
    logger.info("%d 元超群：%d 张表，%d 个同构类", n, len(tables), len(forms))
    return forms


# ---- 超域 ----


def _cyclic_table(m: int) -> Table:
    return tuple(tuple((i + j) % m for j in range(m)) for i in range(m))


def _unit_groups(m: int) -> list[tuple[str, Table]]:
    """阶为 m 的全部有限群（m ≤ 6）。"""

    groups = [(f"C{m}", _cyclic_table(m))]
    if m == 4:
        groups.append(("C2xC2", tuple(tuple(i ^ j for j in range(4)) for i in range(4))))
    if m == 6:
        elements = list(permutations(range(3)))
        index = {p: i for i, p in enumerate(elements)}
        groups.append(
            ("S3", tuple(tuple(index[tuple(p[q[k]] for k in range(3))] for q in elements) for p in elements))
        )
    return groups


def _group_inverse(table: Table) -> list[int]:
    m = len(table)
    return [next(j for j in range(m) if table[i][j] == 0) for i in range(m)]


def _central_involutions(table: Table) -> list[int]:
    m = len(table)
    return [
        e
        for e in range(m)
        if table[e][e] == 0 and all(table[e][g] == table[g][e] for g in range(m))
    ]


def _pair_orbits(table: Table, epsilon: int) -> list[tuple[tuple[int, int], ...]]:
    """(b, a) 表示 b ∈ 1 ⊞ a；在可反转性、可逆性与共轭下的轨道。"""

    m = len(table)
    inv = _group_inverse(table)

    def images(pair):
        b, a = pair
        yield inv[b], table[table[inv[b]][epsilon]][a]
        yield table[epsilon][a], table[epsilon][b]
        yield table[inv[a]][b], inv[a]
        for z in range(m):
            yield table[table[inv[z]][b]][z], table[table[inv[z]][a]][z]

    seen: set[tuple[int, int]] = set()
    orbits = []
    for start in product(range(m), repeat=2):
        if start in seen:
            continue
        seen.add(start)
        orbit = [start]
        stack = [start]
        while stack:
            for image in images(stack.pop()):
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
                    stack.append(image)
        orbits.append(tuple(orbit))
    return orbits


def _hyperfield_tables(table: Table, epsilon: int, chosen: Sequence[tuple[tuple[int, int], ...]]):
    """由 T_a = 1 ⊞ a 得到 x ⊞ y = x·T_{x⁻¹y}。"""

    m = len(table)
    n = m + 1
    inv = _group_inverse(table)
    shifts = [0] * m
    for orbit in chosen:
        for b, a in orbit:
            shifts[a] |= 1 << b
    for a in range(m):
        if a != epsilon and not shifts[a]:
            return None
    add = [[0] * n for _ in range(n)]
    for y in range(n):
        add[0][y] = 1 << y
        add[y][0] = 1 << y
    for x in range(m):
        for y in range(m):
            a = table[inv[x]][y]
            cell = 1 if a == epsilon else 0
            for b in range(m):
                if shifts[a] >> b & 1:
                    cell |= 1 << (table[x][b] + 1)
            add[x + 1][y + 1] = cell
    mul = [[0] * n for _ in range(n)]
    for x in range(m):
        for y in range(m):
            mul[x + 1][y + 1] = table[x][y] + 1
    return tuple(map(tuple, add)), tuple(map(tuple, mul))


def _hyperfield_worker(task) -> list[tuple[Table, Table]]:
    table, epsilon = task
    n = len(table) + 1
    orbits = _pair_orbits(table, epsilon)
    results = []
    for mask in range(1 << len(orbits)):
        chosen = [orbit for i, orbit in enumerate(orbits) if mask >> i & 1]
        built = _hyperfield_tables(table, epsilon, chosen)
        if built is None:
            continue
        add, mul = built
        t = FiniteHyperStructure(names=_names(n), add=add, mul=mul, one_index=1, kind="hyperfield")
        if kernel_service.is_hyperfield(t):
            results.append((add, mul))
    return results


def enumerate_hyperfields(
    n: int,
    *,
    stringent: bool = False,
    dd: bool = False,
    workers: int = ENUM_WORKERS,
) -> list[CanonicalForm]:
    """n 元（斜）超域的全部同构类；单位群取遍阶为 n-1 的所有群。

    每个枚举到的超域都核对“双重分配 ⇒ 严格”，反例抛 TheoremViolationError。
    """

    _check_size(n, HYPERFIELD_ENUM_LIMIT, "超域")
    if n == 1:
        return []
    tasks = [
        (table, epsilon)
        for _, table in _unit_groups(n - 1)
        for epsilon in _central_involutions(table)
    ]
    logger.info("枚举 %d 元超域：%d 个 (单位群, -1) 组合", n, len(tasks))
    found = []
    for batch in _run_tasks(_hyperfield_worker, tasks, workers):
        for add, mul in batch:
            t = FiniteHyperStructure(names=_names(n), add=add, mul=mul, one_index=1, kind="hyperfield")
            t_stringent = kernel_service.is_stringent(t)[0]
            t_dd = kernel_service.is_doubly_distributive(t)[0]
            if t_dd and not t_stringent:
                logger.error("双重分配却不严格的 %d 元超域：%s", n, add)
                raise TheoremViolationError(f"{n} 元超域中出现双重分配但不严格的结构")
            if stringent and not t_stringent:
                continue
            if dd and not t_dd:
                continue
            found.append(t)
    forms = _dedupe(found)
    forms = [
        CanonicalForm(key=form.key, structure=form.structure.renamed(_names(n), name=f"F{n}.{i}"), perm=form.perm)
        for i, form in enumerate(forms)
    ]
    logger.info("%d 元超域（stringent=%s, dd=%s）：%d 个同构类", n, stringent, dd, len(forms))
    return forms


# ---- 超环 ----


def _distributive_maps(add: Table) -> list[tuple[int, ...]]:
    """f(0) = 0 且 f(y ⊞ z) = f(y) ⊞ f(z)（集合相等）的全部映射。"""

    n = len(add)
    maps = []
    for values in product(range(n), repeat=n - 1):
        f = (0,) + values
        if all(
            _image(add[y][z], f) == add[f[y]][f[z]]
            for y in range(1, n)
            for z in range(1, n)
        ):
            maps.append(f)
    return maps


def _image(mask: int, f: Sequence[int]) -> int:
    out = 0
    for z in bits_of(mask):
        out |= 1 << f[z]
    return out


def _hyperring_worker(task) -> list[tuple[Table, int]]:
    add, one = task
    n = len(add)
    maps = _distributive_maps(add)
    allowed = set(maps)
    identity = tuple(range(n))
    zero_row = (0,) * n
    others = [x for x in range(1, n) if x != one]
    rows: list[tuple[int, ...] | None] = [None] * n
    rows[0] = zero_row
    rows[one] = identity
    results = []

    def consistent() -> bool:
        for x in range(n):
            if rows[x] is None:
                continue
            if rows[x][one] != x:
                return False
            for y in range(n):
                if rows[y] is None:
                    continue
                xy = rows[x][y]
                if rows[xy] is None:
                    continue
                for z in range(n):
                    if rows[xy][z] != rows[x][rows[y][z]]:
                        return False
        return True

    def search(i: int) -> None:
        if i == len(others):
            columns = [tuple(rows[y][x] for y in range(n)) for x in range(n)]
            if all(column in allowed for column in columns[1:]):
                results.append((tuple(rows), one))
            return
        x = others[i]
        for candidate in maps:
            rows[x] = candidate
            if consistent():
                search(i + 1)
        rows[x] = None

    if identity in allowed:
        search(0)
    return results


def enumerate_hyperrings(n: int, *, workers: int = ENUM_WORKERS) -> list[CanonicalForm]:
    """加法取遍 n 元严格超群的全部严格（斜）超环。"""

    _check_size(n, HYPERRING_ENUM_LIMIT, "超环")
    if n == 1:
        return [isomorphism_service.canonical_form(catalog_service.trivial())]
    additive = enumerate_hypergroups(n, stringent=True, workers=workers)
    tasks = [(form.structure.add, one) for form in additive for one in range(1, n)]
    logger.info("枚举 %d 元严格超环：%d 个 (加法, 1) 组合", n, len(tasks))
    found = []
    for (add, _), batch in zip(tasks, _run_tasks(_hyperring_worker, tasks, workers)):
        for mul, one in batch:
            t = FiniteHyperStructure(names=_names(n), add=add, mul=mul, one_index=one, kind="hyperring")
            if kernel_service.check_skew_hyperring(t).passed:
                found.append(t)
    forms = [
        CanonicalForm(key=form.key, structure=form.structure.renamed(_names(n), name=f"R{n}.{i}"), perm=form.perm)
        for i, form in enumerate(_dedupe(found))
    ]
    logger.info("%d 元严格超环：%d 个同构类", n, len(forms))
    return forms
