"""Scenario and table documents: parsing, validation, bundled data.

A scenario document names two groups, a prime, one block on each side
and a virtual bimodule given by twisted-diagonal terms.  Groups are
given by bundled name, permutation generators, or an explicit
multiplication table.  Loading the same bundled name twice yields the
same group object, so cached constructions (products, local groups) are
shared across a whole run.
"""

from __future__ import annotations

import json
from importlib import resources

from .characters import (CharacterTable, abelian_character_table,
                         ingest_character_table)
from .groups import (FiniteGroup, GroupHom, element_by_name,
                     group_from_permutations, subgroup_generated,
                     _extend_hom)
from .namedgroups import BUNDLED_NAMES, named_group
from .subdirect import ProductSubgroup, twisted_diagonal


_CUSTOM_GROUPS: dict = {}


def group_from_spec(spec) -> FiniteGroup:
    """Resolve a group spec: bundled name, generator list, or table.

    Dict specs accept {"name", "generators"} with one-line cycle strings
    or {"name", "table"} with a full multiplication table.  Equal specs
    return the identical group object.
    """
    if isinstance(spec, str):
        return named_group(spec)
    if not isinstance(spec, dict):
        raise ValueError(f"bad group spec {spec!r}")
    name = spec.get("name", "")
    if "generators" in spec:
        key = (name, tuple(spec["generators"]))
        if key not in _CUSTOM_GROUPS:
            _CUSTOM_GROUPS[key] = group_from_permutations(
                spec["generators"], name=name or "G")
        return _CUSTOM_GROUPS[key]
    if "table" in spec:
        key = (name, tuple(tuple(row) for row in spec["table"]))
        if key not in _CUSTOM_GROUPS:
            _CUSTOM_GROUPS[key] = FiniteGroup(key[1], name=name or "G")
        return _CUSTOM_GROUPS[key]
    if name:
        return named_group(name)
    raise ValueError("group spec needs a name, generators, or a table")


def group_to_spec(G: FiniteGroup):
    """A document fragment that resolves back to G."""
    if G.name in BUNDLED_NAMES and named_group(G.name) is G:
        return G.name
    if getattr(G, "generator_ids", None) is not None \
            and getattr(G, "element_names", None) is not None:
        return {"name": G.name,
                "generators": [G.element_names[g] for g in G.generator_ids]}
    return {"name": G.name, "table": [list(r) for r in G.table]}


# -- bundled character tables ----------------------------------------

_TABLE_CACHE: dict[str, CharacterTable] = {}


def bundled_table(name: str) -> CharacterTable:
    """The validated character table shipped for a bundled group name."""
    if name not in _TABLE_CACHE:
        if name not in BUNDLED_NAMES:
            raise ValueError(f"no bundled table for {name!r}")
        text = resources.files("bisetblocks") \
            .joinpath(f"data/tables/{name}.json").read_text()
        doc = json.loads(text)
        _TABLE_CACHE[name] = ingest_character_table(doc,
                                                    group=named_group(name))
    return _TABLE_CACHE[name]


def table_for_group(G: FiniteGroup, doc: dict | None = None
                    ) -> CharacterTable:
    """Find a character table: explicit document, bundled, or abelian."""
    if doc is not None:
        return ingest_character_table(doc, group=G)
    if G.name in BUNDLED_NAMES and named_group(G.name) is G:
        return bundled_table(G.name)
    if G.is_abelian():
        return abelian_character_table(G)
    raise ValueError(
        f"no character table available for {G.name}; supply one")


# -- scenario documents ----------------------------------------------

class GammaTerm:
    """One transitive summand of a virtual bimodule: vertex + weight."""

    __slots__ = ("vertex", "coefficient")

    def __init__(self, vertex: ProductSubgroup, coefficient: int) -> None:
        self.vertex = vertex
        self.coefficient = int(coefficient)

    def __repr__(self):
        return f"GammaTerm(|X|={self.vertex.order}, c={self.coefficient})"


def parse_term(doc: dict, G: FiniteGroup, H: FiniteGroup) -> GammaTerm:
    """Build a twisted-diagonal term from generator data.

    The document lists generators of P <= G and Q <= H and the images
    phi(q_i) in G defining the isomorphism phi: Q -> P; the graph
    {(phi(y), y)} is the vertex.
    """
    p_gens = [element_by_name(G, s) for s in doc["p_gens"]]
    q_gens = [element_by_name(H, s) for s in doc["q_gens"]]
    phi_imgs = [element_by_name(G, s) for s in doc["phi"]]
    if len(phi_imgs) != len(q_gens):
        raise ValueError("phi must list one image per generator of Q")
    P = subgroup_generated(G, p_gens)
    Q = subgroup_generated(H, q_gens)
    Pg, Qg = P.as_group(), Q.as_group()
    imgs_local = []
    for im in phi_imgs:
        if im not in P.element_set:
            raise ValueError("phi image falls outside P")
        imgs_local.append(P.to_local(im))
    table = _extend_hom(Qg, Pg, [Q.to_local(q) for q in q_gens],
                        imgs_local)
    if table is None or sorted(table) != list(range(Pg.order)):
        raise ValueError("phi does not extend to an isomorphism Q -> P")
    phi = GroupHom(Qg, Pg, table, check=False)
    return GammaTerm(twisted_diagonal(P, phi, Q), int(doc["coefficient"]))


def term_to_doc(term: GammaTerm) -> dict:
    X = term.vertex
    amb = X.ambient
    G, H = amb.left, amb.right
    if X.k2.order != 1 or X.k1.order != 1:
        raise ValueError("term is not the graph of an isomorphism")
    pair_map = {b: a for a, b in X.pairs()}
    from .groups import minimal_generating_sequence
    Qg = X.p2.as_group()
    q_gens = [X.p2.from_local(i) for i in minimal_generating_sequence(Qg)]
    return {
        "p_gens": [G.element_names[pair_map[q]] for q in q_gens],
        "q_gens": [H.element_names[q] for q in q_gens],
        "phi": [G.element_names[pair_map[q]] for q in q_gens],
        "coefficient": term.coefficient,
    }


class Scenario:
    """A parsed scenario: groups, prime, block selectors, gamma terms."""

    def __init__(self, doc: dict) -> None:
        if doc.get("kind") != "broue-scenario":
            raise ValueError("document is not a broue-scenario")
        self.doc = doc
        self.name = doc.get("name", "scenario")
        self.G = group_from_spec(doc["group_G"])
        self.H = group_from_spec(doc["group_H"])
        self.p = int(doc["prime"])
        if self.p < 2 or any(self.p % d == 0 for d in range(2, self.p)):
            raise ValueError(f"{self.p} is not prime")
        self.block_G = doc["block_G"]
        self.block_H = doc["block_H"]
        for sel in (self.block_G, self.block_H):
            if not ("contains_char" in sel or "index" in sel):
                raise ValueError("block selector needs contains_char or index")
        self.table_G = table_for_group(self.G, doc.get("table_G"))
        self.table_H = table_for_group(self.H, doc.get("table_H"))
        if "complex" in doc:
            self.complex = [
                (int(entry["degree"]),
                 [parse_term(t, self.G, self.H) for t in entry["terms"]])
                for entry in doc["complex"]]
        else:
            self.complex = None
        self.gamma_terms = [parse_term(t, self.G, self.H)
                            for t in doc.get("gamma", [])]
        if not self.gamma_terms and self.complex is None:
            raise ValueError("scenario carries neither gamma nor a complex")
        self.checks = dict(doc.get("checks", {}))
        for sel in self.block_G, self.block_H:
            if "contains_char" in sel:
                tab = self.table_G if sel is self.block_G else self.table_H
                if sel["contains_char"] not in tab.names:
                    raise ValueError(
                        f"unknown character {sel['contains_char']!r}")

    def emit(self) -> dict:
        """The canonical document for this scenario."""
        out = {
            "kind": "broue-scenario",
            "name": self.name,
            "group_G": group_to_spec(self.G),
            "group_H": group_to_spec(self.H),
            "prime": self.p,
            "block_G": dict(self.block_G),
            "block_H": dict(self.block_H),
            "gamma": [term_to_doc(t) for t in self.gamma_terms],
        }
        if self.complex is not None:
            out["complex"] = [
                {"degree": d, "terms": [term_to_doc(t) for t in terms]}
                for d, terms in self.complex]
        if self.checks:
            out["checks"] = dict(self.checks)
        if "table_G" in self.doc:
            out["table_G"] = self.doc["table_G"]
        if "table_H" in self.doc:
            out["table_H"] = self.doc["table_H"]
        return out


def parse_scenario(doc: dict) -> Scenario:
    return Scenario(doc)


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


BUNDLED_SCENARIOS = ("c6_c3", "identity_s3", "a4_c3")


def bundled_scenario(name: str) -> Scenario:
    if name not in BUNDLED_SCENARIOS:
        raise ValueError(f"no bundled scenario {name!r}")
    text = resources.files("bisetblocks") \
        .joinpath(f"data/scenarios/{name}.json").read_text()
    return Scenario(json.loads(text))
