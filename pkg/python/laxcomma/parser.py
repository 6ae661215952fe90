# Copyright © 2024 laxcomma contributors.

"""The ``.fincat`` presentation format.

A file is a sequence of named blocks. Inside a block, entries are
``key: value`` pairs separated by newlines or ``;``; an entry whose value
ends with ``,`` continues on the next line.

.. code-block:: text

    # the arrow category
    category two {
      objects: 0 1
      morphisms: id0: 0 -> 0, id1: 1 -> 1, u: 0 -> 1
      identities: 0=id0 1=id1
    }

    category one { objects: * }

    functor d0 : one -> two { objects: *->0 }
    functor d1 : one -> two { objects: *->1 }
    nat step : d0 => d1 { *: u }

    command c1 { op: comma; args: d0 d1 }

Identity laws in ``compose`` are implicit, as are identities named
``id_<object>`` for objects with no ``identities`` entry. A functor maps
identities to identities without being told, and any morphism whose target
hom-set has a single element. ``preorder`` blocks close ``le`` reflexively
but never transitively.
"""

import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from laxcomma.errors import ParseError, ValidationError
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    thin_category,
    validate_category,
    validate_functor,
    validate_nat,
    validate_preorder,
)
from laxcomma.thin2 import (
    Monad2Data,
    PoCategory,
    PoFunctor,
    pos_pocategory,
    validate_2monad,
    validate_pocategory,
    validate_pofunctor,
)
from laxcomma.utils import format_id

KINDS = ("category", "preorder", "pocategory", "functor", "nat", "monad", "command")

_KEYS = {
    "category": ("objects", "morphisms", "identities", "compose", "thin"),
    "preorder": ("elements", "le"),
    "pocategory": ("base", "pos", "order"),
    "functor": ("objects", "morphisms"),
    "monad": ("eta", "mu"),
    "command": ("op", "args", "flags"),
}

_HEADERS = {
    "functor": re.compile(r"^:\s*(\S+)\s*->\s*(\S+)$"),
    "nat": re.compile(r"^:\s*(\S+)\s*=>\s*(\S+)$"),
    "monad": re.compile(r"^:\s*(\S+)$"),
}

_BLOCK = re.compile(r"^(\w+)\s+([^\s{:]+)\s*([^{]*?)\s*\{(.*)$")
_MORPHISM = re.compile(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_COMPOSE = re.compile(r"^([^.=\s]+)\.([^.=\s]+)=([^.=\s]+)$")


@dataclass
class Entry:
    key: str
    value: str
    line: int = field(default=0, compare=False)


@dataclass
class Block:
    """One named block. ``value`` holds the validated structure."""

    kind: str
    name: str
    header: Tuple[str, ...]
    entries: List[Entry]
    line: int = field(default=0, compare=False)
    value: Any = field(default=None, compare=False)

    def get(self, key: str, default: Optional[str] = None) -> Optional[str]:
        values = [e.value for e in self.entries if e.key == key]
        if not values:
            return default
        return ", ".join(values)


@dataclass(frozen=True)
class Command:
    name: str
    op: str
    args: Tuple[str, ...]
    flags: Tuple[str, ...] = ()


class SpecFile:
    """The blocks of a presentation file, in order, with lookup by name."""

    def __init__(self, blocks: List[Block]):
        self.blocks = list(blocks)
        self._index = {(b.kind, b.name): b for b in self.blocks}

    def __repr__(self):
        names = ", ".join(f"{b.kind} {b.name}" for b in self.blocks)
        return f"SpecFile({names})"

    def __eq__(self, other):
        if not isinstance(other, SpecFile):
            return NotImplemented
        mine = [(b.kind, b.name, b.value) for b in self.blocks]
        theirs = [(b.kind, b.name, b.value) for b in other.blocks]
        return mine == theirs

    def block(self, kind: str, name: str) -> Optional[Block]:
        return self._index.get((kind, name))

    def __contains__(self, key):
        return key in self._index

    def of_kind(self, kind: str) -> Dict[str, Any]:
        return {b.name: b.value for b in self.blocks if b.kind == kind}

    @property
    def commands(self) -> List[Command]:
        return [b.value for b in self.blocks if b.kind == "command"]

    def category(self, name: str, line: int = 0) -> Union[FinCategory, PoCategory]:
        """Resolve ``name`` as a category, a po-category or a preorder."""
        for kind in ("category", "pocategory", "preorder"):
            b = self.block(kind, name)
            if b is not None:
                return thin_category(b.value) if kind == "preorder" else b.value
        raise ParseError(f"unresolved-reference: no category named {name!r}", line)

    def functor(self, name: str, line: int = 0) -> Union[FinFunctor, PoFunctor]:
        b = self.block("functor", name)
        if b is None:
            raise ParseError(f"unresolved-reference: no functor named {name!r}", line)
        return b.value

    def nat(self, name: str, line: int = 0) -> NatTrans:
        b = self.block("nat", name)
        if b is None:
            raise ParseError(f"unresolved-reference: no transformation named {name!r}", line)
        return b.value

    def preorder(self, name: str, line: int = 0) -> FinPreorder:
        b = self.block("preorder", name)
        if b is None:
            raise ParseError(f"unresolved-reference: no preorder named {name!r}", line)
        return b.value

    def monotone(self, name: str, line: int = 0) -> MonotoneMap:
        """A functor between two preorder blocks, as a monotone map."""
        b = self.block("functor", name)
        if b is None:
            raise ParseError(f"unresolved-reference: no functor named {name!r}", line)
        dom, cod = b.header
        if self.block("preorder", dom) is None or self.block("preorder", cod) is None:
            raise ParseError(f"{name} is not a map between preorders", line)
        return MonotoneMap(self.preorder(dom), self.preorder(cod), b.value.obj_map)


def _tokens(value: Optional[str]) -> List[str]:
    if not value:
        return []
    return [t for t in re.split(r"[\s,]+", value.strip()) if t]


def _pair(token: str, sep: str, line: int) -> Tuple[str, str]:
    left, found, right = token.partition(sep)
    if not found or not left or not right:
        raise ParseError(f"expected 'x{sep}y', got {token!r}", line)
    return left, right


def _morphism(c: FinCategory, token: str, line: int):
    if token in c.morphisms:
        return token
    if "<=" in token:
        x, y = _pair(token, "<=", line)
        if (x, y) in c.morphisms:
            return (x, y)
    raise ParseError(f"unresolved-reference: no morphism {token!r}", line)


def _object(c, token: str, line: int):
    if token not in c.objects:
        raise ParseError(f"unresolved-reference: no object {token!r}", line)
    return token


def _located(e: ValidationError, what: str, line: int) -> ValidationError:
    return ValidationError(what, e.violations, line=line)


def _build_category(block: Block, spec: SpecFile) -> FinCategory:
    thin = block.get("thin")
    if thin is not None:
        p = spec.preorder(thin.strip(), block.line)
        c = thin_category(p)
        return FinCategory(c.objects, c.morphisms, c.identity, c.composition, name=block.name)

    objects = _tokens(block.get("objects"))
    morphisms = {}
    for item in (block.get("morphisms") or "").split(","):
        item = item.strip()
        if not item:
            continue
        m = _MORPHISM.match(item)
        if m is None:
            raise ParseError(f"expected 'f: a -> b', got {item!r}", block.line)
        f, s, t = m.groups()
        if f in morphisms:
            raise ParseError(f"duplicate-identifier: morphism {f!r}", block.line)
        morphisms[f] = (s, t)
    identity = dict(_pair(t, "=", block.line) for t in _tokens(block.get("identities")))
    for x in objects:
        if x not in identity:
            identity[x] = f"id_{x}"
            morphisms.setdefault(identity[x], (x, x))
    composition = {}
    for t in _tokens(block.get("compose")):
        m = _COMPOSE.match(t)
        if m is None:
            raise ParseError(f"expected 'g.f=h', got {t!r}", block.line)
        g, f, h = m.groups()
        composition[(g, f)] = h
    for f, (s, t) in morphisms.items():
        if s in identity:
            composition.setdefault((f, identity[s]), f)
        if t in identity:
            composition.setdefault((identity[t], f), f)
    try:
        return validate_category(
            {
                "objects": objects,
                "morphisms": morphisms,
                "identities": identity,
                "compose": composition,
                "name": block.name,
            }
        )
    except ValidationError as e:
        raise _located(e, f"category {block.name}", block.line)


def _build_preorder(block: Block, spec: SpecFile) -> FinPreorder:
    elements = _tokens(block.get("elements"))
    le = {(x, x) for x in elements}
    le.update(_pair(t, "<=", block.line) for t in _tokens(block.get("le")))
    try:
        return validate_preorder(FinPreorder(elements, le, name=block.name))
    except ValidationError as e:
        raise _located(e, f"preorder {block.name}", block.line)


def _build_pocategory(block: Block, spec: SpecFile) -> PoCategory:
    pos = block.get("pos")
    if pos is not None:
        preorders = {n: spec.preorder(n, block.line) for n in _tokens(pos)}
        return pos_pocategory(preorders, name=block.name)
    base_name = block.get("base")
    if base_name is None:
        raise ParseError("pocategory needs 'base:' or 'pos:'", block.line)
    base = spec.category(base_name.strip(), block.line)
    if isinstance(base, PoCategory):
        base = base.base
    order = {(f, f) for f in base.morphisms}
    for t in _tokens(block.get("order")):
        f, g = _pair(t, "<=", block.line)
        order.add((_morphism(base, f, block.line), _morphism(base, g, block.line)))
    try:
        return validate_pocategory(PoCategory(base, order, name=block.name))
    except ValidationError as e:
        raise _located(e, f"pocategory {block.name}", block.line)


def _build_functor(block: Block, spec: SpecFile):
    dom_name, cod_name = block.header
    dom = spec.category(dom_name, block.line)
    cod = spec.category(cod_name, block.line)
    two_functor = isinstance(dom, PoCategory) and isinstance(cod, PoCategory)
    if not two_functor:
        dom = dom.base if isinstance(dom, PoCategory) else dom
        cod = cod.base if isinstance(cod, PoCategory) else cod

    obj_map = {}
    for t in _tokens(block.get("objects")):
        x, y = _pair(t, "->", block.line)
        obj_map[_object(dom, x, block.line)] = _object(cod, y, block.line)
    missing = [x for x in dom.objects if x not in obj_map]
    if missing:
        raise ParseError(
            f"functor {block.name} does not map {', '.join(map(format_id, missing))}",
            block.line,
        )
    mor_map = {}
    for t in _tokens(block.get("morphisms")):
        f, g = _pair(t, "->", block.line)
        mor_map[_morphism(dom, f, block.line)] = _morphism(cod, g, block.line)
    for x in dom.objects:
        mor_map.setdefault(dom.id(x), cod.id(obj_map[x]))
    for f, (s, t) in dom.morphisms.items():
        if f not in mor_map:
            candidates = cod.hom(obj_map[s], obj_map[t])
            if len(candidates) != 1:
                raise ParseError(
                    f"functor {block.name} does not map {format_id(f)}", block.line
                )
            mor_map[f] = candidates[0]
    try:
        if two_functor:
            return validate_pofunctor(PoFunctor(dom, cod, obj_map, mor_map))
        return validate_functor(FinFunctor(dom, cod, obj_map, mor_map, name=block.name))
    except ValidationError as e:
        raise _located(e, f"functor {block.name}", block.line)


def _build_nat(block: Block, spec: SpecFile) -> NatTrans:
    F = spec.functor(block.header[0], block.line)
    G = spec.functor(block.header[1], block.line)
    if isinstance(F, PoFunctor):
        F = F.underlying()
    if isinstance(G, PoFunctor):
        G = G.underlying()
    components = {}
    for e in block.entries:
        if e.key == "components":
            pairs = [_pair(t, "=", e.line) for t in _tokens(e.value)]
        else:
            pairs = [(e.key, e.value.strip())]
        for x, m in pairs:
            components[_object(F.dom, x, e.line)] = _morphism(F.cod, m, e.line)
    missing = [x for x in F.dom.objects if x not in components]
    if missing:
        raise ParseError(
            f"nat {block.name} has no component at {', '.join(map(format_id, missing))}",
            block.line,
        )
    try:
        return validate_nat(NatTrans(F, G, components))
    except ValidationError as e:
        raise _located(e, f"nat {block.name}", block.line)


def _build_monad(block: Block, spec: SpecFile) -> Monad2Data:
    T = spec.functor(block.header[0], block.line)
    if not isinstance(T, PoFunctor):
        raise ParseError(f"monad {block.name} needs a 2-functor between po-categories", block.line)
    k = T.dom
    cells = {}
    for key in ("eta", "mu"):
        cells[key] = {}
        for t in _tokens(block.get(key)):
            x, f = _pair(t, "=", block.line)
            cells[key][_object(k, x, block.line)] = _morphism(k.base, f, block.line)
    try:
        return validate_2monad(Monad2Data(T, cells["eta"], cells["mu"]))
    except ValidationError as e:
        raise _located(e, f"monad {block.name}", block.line)


def _build_command(block: Block, spec: SpecFile) -> Command:
    op = block.get("op")
    if not op:
        raise ParseError(f"command {block.name} names no 'op'", block.line)
    return Command(
        block.name, op.strip(), tuple(_tokens(block.get("args"))), tuple(_tokens(block.get("flags")))
    )


_BUILDERS = {
    "category": _build_category,
    "preorder": _build_preorder,
    "pocategory": _build_pocategory,
    "functor": _build_functor,
    "nat": _build_nat,
    "monad": _build_monad,
    "command": _build_command,
}


def _add_segment(kind: str, entries: List[Entry], segment: str, line: int):
    segment = segment.strip()
    if not segment:
        return
    key, found, value = segment.partition(":")
    key = key.strip()
    if found and (kind == "nat" or key in _KEYS[kind]):
        entries.append(Entry(key, " ".join(value.split()), line))
        return
    if entries and entries[-1].value.endswith(","):
        entries[-1].value = f"{entries[-1].value} {' '.join(segment.split())}"
        return
    if not found:
        raise ParseError(f"expected 'key: value', got {segment!r}", line)
    raise ParseError(f"unknown key {key!r} in a {kind} block", line)


def _header(kind: str, rest: str, line: int) -> Tuple[str, ...]:
    pattern = _HEADERS.get(kind)
    if pattern is None:
        if rest:
            raise ParseError(f"unexpected {rest!r} after the {kind} name", line)
        return ()
    m = pattern.match(rest)
    if m is None:
        raise ParseError(f"malformed {kind} header {rest!r}", line)
    return m.groups()


def _split_blocks(text: str) -> List[Block]:
    blocks, current = [], None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if current is None:
            m = _BLOCK.match(line)
            if m is None:
                raise ParseError(f"expected a block header, got {line!r}", lineno)
            kind, name, rest, body = m.groups()
            if kind not in KINDS:
                raise ParseError(f"unknown block kind {kind!r}", lineno)
            current = Block(kind, name, _header(kind, rest, lineno), [], lineno)
            line = body
        body, closed, trailing = line.partition("}")
        for segment in body.split(";"):
            _add_segment(current.kind, current.entries, segment, lineno)
        if closed:
            if trailing.strip():
                raise ParseError(f"unexpected {trailing.strip()!r} after '}}'", lineno)
            blocks.append(current)
            current = None
    if current is not None:
        raise ParseError(f"unterminated {current.kind} {current.name}", current.line)
    return blocks


def parse_spec_file(text: str) -> SpecFile:
    """Parse and validate a presentation.

    Blocks are built in file order, so a block may only refer to blocks
    above it.

    Raises:
        ParseError: On lexical errors and unresolved references.
        ValidationError: When a block violates the laws of its structure;
            ``line`` is the line of the block header.
    """
    spec = SpecFile([])
    for block in _split_blocks(text):
        if (block.kind, block.name) in spec:
            raise ParseError(
                f"duplicate-identifier: {block.kind} {block.name!r}", block.line
            )
        block.value = _BUILDERS[block.kind](block, spec)
        spec.blocks.append(block)
        spec._index[(block.kind, block.name)] = block
    return spec


def load_spec_file(path: str) -> SpecFile:
    with open(path, encoding="utf-8") as fid:
        return parse_spec_file(fid.read())


def format_spec_file(spec: SpecFile) -> str:
    """Serialize a parsed presentation; parsing the result gives an equal
    :class:`SpecFile`."""
    out = []
    for b in spec.blocks:
        header = " ".join([b.kind, b.name])
        if b.kind in ("functor", "nat"):
            arrow = "->" if b.kind == "functor" else "=>"
            header += f" : {b.header[0]} {arrow} {b.header[1]}"
        elif b.kind == "monad":
            header += f" : {b.header[0]}"
        out.append(header + " {")
        for e in b.entries:
            out.append(f"  {e.key}: {e.value}")
        out.append("}")
        out.append("")
    return "\n".join(out)


def format_category(c: FinCategory, name: Optional[str] = None) -> str:
    """Render a category as an explicit ``category`` block.

    Non-identity composites are listed; identifiers that are tuples are
    rendered with :func:`~laxcomma.utils.format_id`.
    """
    name = name or c.name or "c"
    identities = set(c.identity.values())
    lines = [f"category {name} {{"]
    lines.append("  objects: " + " ".join(format_id(x) for x in c.objects))
    lines.append(
        "  morphisms: "
        + ", ".join(
            f"{format_id(f)}: {format_id(s)} -> {format_id(t)}" for f, (s, t) in c.morphisms.items()
        )
    )
    lines.append(
        "  identities: " + " ".join(f"{format_id(x)}={format_id(i)}" for x, i in c.identity.items())
    )
    compose = [
        f"{format_id(g)}.{format_id(f)}={format_id(h)}"
        for (g, f), h in c.composition.items()
        if g not in identities and f not in identities
    ]
    if compose:
        lines.append("  compose: " + " ".join(compose))
    lines.append("}")
    return "\n".join(lines)


def format_functor(F: FinFunctor, name: Optional[str] = None) -> str:
    name = name or F.name or "F"
    dom = F.dom.name or "dom"
    cod = F.cod.name or "cod"
    lines = [f"functor {name} : {dom} -> {cod} {{"]
    lines.append(
        "  objects: " + " ".join(f"{format_id(x)}->{format_id(y)}" for x, y in F.obj_map.items())
    )
    lines.append(
        "  morphisms: " + " ".join(f"{format_id(f)}->{format_id(g)}" for f, g in F.mor_map.items())
    )
    lines.append("}")
    return "\n".join(lines)
