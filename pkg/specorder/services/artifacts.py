"""
Specorder - Artifact Service
Builds quotient listings and posets from a run configuration and renders
them as text, JSON, DOT or CSV
"""

import csv
import io
from collections.abc import Sequence

import graphviz
import orjson

from specorder.core.exceptions import ConfigurationError
from specorder.core.logging import get_context_logger
from specorder.coxeter.subsets import SimpleSubset
from specorder.coxeter.system import CoxeterSystem, build_system
from specorder.parabolic.quotients import double_reps, min_coset_reps
from specorder.schemas.poset import PosetDocument, PosetNode
from specorder.schemas.quotient import QuotientListing, QuotientRow
from specorder.schemas.run import RunConfig
from specorder.symplectic.eo import EOStratum, eo_poset
from specorder.twisted.order import make_twisted_order, spec_poset
from specorder.twisted.poset import Poset


def dump_json(document: dict) -> str:
    """Byte-stable JSON: schema field order, no sorting, trailing newline."""
    return orjson.dumps(document, option=orjson.OPT_INDENT_2).decode("utf-8") + "\n"


def system_from_config(config: RunConfig) -> CoxeterSystem:
    return build_system(
        str(config.family),
        config.rank,
        frobenius_map=config.frobenius_zero_based,
        max_order=config.max_order,
    )


class ArtifactService:
    """
    Service producing the CLI artefacts.

    Every output is a pure function of the configuration; vertex and row
    order are deterministic.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_context_logger(
            __name__, command=config.command, family=str(config.family), rank=config.rank
        )

    # =========================================================================
    # Quotients
    # =========================================================================

    def quotient_listing(self) -> QuotientListing:
        config = self.config
        system = system_from_config(config)
        subset = system.check_subset(SimpleSubset.of(config.j_zero_based))
        side = str(config.side)

        if side == "double":
            if config.k is None:
                raise ConfigurationError("--k is required for a double quotient")
            elements = double_reps(system, subset, system.check_subset(SimpleSubset.of(config.k_zero_based or [])))
        else:
            elements = min_coset_reps(system, subset, side)  # type: ignore[arg-type]

        self.logger.info("Quotient enumerated", extra={"count": len(elements)})
        rows = [
            QuotientRow(index=i, word=x.one_based_word(), length=x.length)
            for i, x in enumerate(elements)
        ]
        return QuotientListing(
            family=system.family,
            rank=system.rank,
            j=config.j or [],
            k=config.k if side == "double" else None,
            side=side,
            count=len(rows),
            rows=rows,
        )

    def render_quotient(self, listing: QuotientListing) -> str:
        if str(self.config.output_format) == "json":
            return dump_json(listing.model_dump(mode="json"))
        lines = [f"# {listing.family}{listing.rank} J={listing.j} side={listing.side} count={listing.count}"]
        for row in listing.rows:
            word = " ".join(f"s{i}" for i in row.word) or "e"
            lines.append(f"{row.index}\t{row.length}\t{word}")
        return "\n".join(lines) + "\n"

    # =========================================================================
    # Posets
    # =========================================================================

    def build_poset(self) -> tuple[Poset, PosetDocument]:
        config = self.config
        if config.eo_genus is not None:
            strata = eo_poset(config.eo_genus)
            return strata, self._eo_document(strata, config.eo_genus)

        system = system_from_config(config)
        order = make_twisted_order(system, SimpleSubset.of(config.j_zero_based))
        poset = spec_poset(order)
        nodes = [
            PosetNode(id=i, word=x.one_based_word(), eps=None, length=x.length)
            for i, x in enumerate(poset.labels)
        ]
        return poset, self._document(
            poset,
            nodes,
            family=system.family,
            rank=system.rank,
            j=config.j or [],
            frobenius=config.frobenius or "id",
        )

    def _eo_document(self, poset: Poset[EOStratum], g: int) -> PosetDocument:
        nodes = [
            PosetNode(
                id=i,
                word=stratum.element.one_based_word(),
                eps=stratum.eps.bits,
                length=stratum.dimension,
            )
            for i, stratum in enumerate(poset.labels)
        ]
        return self._document(poset, nodes, family="C", rank=g, j=list(range(1, g)), frobenius="id")

    def _document(
        self,
        poset: Poset,
        nodes: list[PosetNode],
        family: str,
        rank: int,
        j: list[int],
        frobenius: list[int] | str,
    ) -> PosetDocument:
        return PosetDocument(
            family=family,
            rank=rank,
            j=j,
            frobenius=frobenius,
            nodes=nodes,
            leq=poset.leq.tolist() if self.config.include_matrix else None,
            covers=[[lower, upper] for lower, upper in poset.covers],
        )

    def render_poset(self, poset: Poset, document: PosetDocument) -> str:
        fmt = str(self.config.output_format)
        if fmt == "dot":
            return poset_to_dot(poset, document.nodes)
        if fmt == "csv":
            return poset_to_csv(poset)
        payload = document.model_dump(mode="json")
        if payload["leq"] is None:
            del payload["leq"]
        return dump_json(payload)


# =============================================================================
# Renderers
# =============================================================================


def _node_label(node: PosetNode) -> str:
    if node.eps is not None:
        return f"{node.eps} / {node.length}"
    word = "".join(f"s{i}" for i in node.word) or "e"
    return f"{word} / {node.length}"


def poset_to_dot(poset: Poset, nodes: Sequence[PosetNode], name: str = "poset") -> str:
    """
    DOT source of the Hasse diagram. Each edge runs from the larger element
    to the one it covers.
    """
    dot = graphviz.Digraph(name=name)
    for node in nodes:
        dot.node(str(node.id), _node_label(node))
    for lower, upper in poset.covers:
        dot.edge(str(upper), str(lower))
    return dot.source


def poset_to_csv(poset: Poset) -> str:
    """Relation matrix as 0/1, with a header row of node ids."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", *range(len(poset))])
    for i, row in enumerate(poset.leq):
        writer.writerow([i, *(int(v) for v in row)])
    return buffer.getvalue()

