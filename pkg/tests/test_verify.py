"""JSON certificate verification: accepts what the library emits,
returns False on semantic tampering, raises SchemaMismatch on
structural damage."""

import itertools

import pytest

from antistrong import (
    Digraph,
    SchemaMismatch,
    UGraph,
    anticonnected_orientation,
    antistrong_orientation,
    augment_antistrong,
    augment_k_disjoint,
    decompose_forest_odd_pseudoforest,
    exact_antidirected_path,
    forward_trail,
    good_2_detachment,
    instance_hash,
    mixed_pack,
    pack_antistrong,
    verify_certificate_json,
)
from antistrong.schemas import SCHEMA, make_certificate


def complete_graph(n):
    return UGraph(n, tuple(itertools.combinations(range(n), 2)))


def complete_digraph(n):
    return Digraph(n, tuple((u, v) for u in range(n) for v in range(n) if u != v))


def envelope(kind, instance, payload):
    return make_certificate(kind, instance, payload).model_dump()


class TestAccepts:
    def test_antistrong_orientation(self):
        g = complete_graph(5)
        out = antistrong_orientation(g)
        cert = envelope(
            "orientation", g, {"mode": "antistrong", "arcs": [list(a) for a in out.arcs]}
        )
        assert verify_certificate_json(g, cert) is True

    def test_anticonnected_orientation(self):
        g = UGraph(4, ((0, 1), (1, 2), (2, 3)))
        out = anticonnected_orientation(g, 0)
        cert = envelope(
            "orientation",
            g,
            {"mode": "anticonnected", "arcs": [list(a) for a in out.arcs]},
        )
        assert verify_certificate_json(g, cert) is True

    def test_partition_certificate(self):
        g = complete_graph(4)  # 6 edges < 2n-1 = 7, so orientation fails
        cert_obj = antistrong_orientation(g)
        parts = [sorted(p) for p in cert_obj.parts]
        cert = envelope("partition-certificate", g, {"parts": parts})
        assert verify_certificate_json(g, cert) is True

    def test_forward_trail(self):
        d = complete_digraph(3)
        w = forward_trail(d, 0, 1)
        cert = envelope(
            "trail",
            d,
            {
                "mode": "forward-trail",
                "x": w.x,
                "y": w.y,
                "arcs": list(w.arcs),
                "forward": list(w.forward),
            },
        )
        assert verify_certificate_json(d, cert) is True

    def test_antipath(self):
        d = Digraph(3, ((0, 1), (2, 1), (2, 0)))
        w = exact_antidirected_path(d, 0, 1)
        cert = envelope(
            "trail",
            d,
            {
                "mode": "antipath",
                "x": w.x,
                "y": w.y,
                "arcs": list(w.arcs),
                "forward": list(w.forward),
            },
        )
        assert verify_certificate_json(d, cert) is True

    def test_decomposition_feasible(self):
        g = complete_graph(4)
        decomp, _ = decompose_forest_odd_pseudoforest(g)
        cert = envelope(
            "decomposition",
            g,
            {"feasible": True, "black": list(decomp.black), "red": list(decomp.red)},
        )
        assert verify_certificate_json(g, cert) is True

    def test_decomposition_infeasible(self):
        ring = [(i, (i + 1) % 4) for i in range(4)]
        g = UGraph(4, tuple(ring + ring), multigraph=True)  # bipartite, 8 edges
        decomp, deficiency = decompose_forest_odd_pseudoforest(g)
        assert decomp is None
        cert = envelope(
            "decomposition", g, {"feasible": False, "deficiency": sorted(deficiency)}
        )
        assert verify_certificate_json(g, cert) is True

    def test_pack(self):
        d = complete_digraph(4)
        res = pack_antistrong(d, 1)
        cert = envelope(
            "pack",
            d,
            {
                "antistrong_classes": [sorted(c) for c in res.antistrong_classes],
                "connected_classes": [],
                "leftover": sorted(res.leftover),
            },
        )
        assert verify_certificate_json(d, cert) is True

    def test_mixed_pack_with_connected_class(self):
        d = complete_digraph(4)
        res = mixed_pack(d, 1, 1)
        cert = envelope(
            "pack",
            d,
            {
                "antistrong_classes": [sorted(c) for c in res.antistrong_classes],
                "connected_classes": [sorted(c) for c in res.connected_classes],
                "leftover": sorted(res.leftover),
            },
        )
        assert verify_certificate_json(d, cert) is True

    def test_augmentation(self):
        d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
        res = augment_antistrong(d)
        cert = envelope(
            "augmentation", d, {"new_arcs": [list(a) for a in res.new_arcs]}
        )
        assert verify_certificate_json(d, cert) is True

    def test_augmentation_with_classes(self):
        d = complete_digraph(5)
        res = augment_k_disjoint(d, 2)
        assert res is not None and res.new_arcs == ()
        cert = envelope(
            "augmentation",
            d,
            {"new_arcs": [], "classes": [sorted(c) for c in res.classes]},
        )
        assert verify_certificate_json(d, cert) is True

    def test_detachment(self):
        g = complete_graph(5)
        det = good_2_detachment(g)
        cert = envelope("detachment", g, {"edges": [list(e) for e in det.edges]})
        assert verify_certificate_json(g, cert) is True


class TestSemanticRejects:
    def test_hash_mismatch(self):
        g = complete_graph(5)
        out = antistrong_orientation(g)
        cert = envelope(
            "orientation", g, {"mode": "antistrong", "arcs": [list(a) for a in out.arcs]}
        )
        other = complete_graph(6)
        assert instance_hash(other) != cert["input_sha256"]
        assert verify_certificate_json(other, cert) is False

    def test_orientation_arc_count(self):
        g = complete_graph(5)
        out = antistrong_orientation(g)
        arcs = [list(a) for a in out.arcs][:-1]
        cert = envelope("orientation", g, {"mode": "antistrong", "arcs": arcs})
        assert verify_certificate_json(g, cert) is False

    def test_orientation_foreign_arc(self):
        g = UGraph(3, ((0, 1), (1, 2), (0, 2)))
        cert = envelope(
            "orientation",
            g,
            {"mode": "antistrong", "arcs": [[0, 1], [1, 2], [1, 2]]},
        )
        assert verify_certificate_json(g, cert) is False

    def test_orientation_needs_graph_instance(self):
        d = complete_digraph(3)
        cert = envelope("orientation", d, {"mode": "antistrong", "arcs": [[0, 1]]})
        assert verify_certificate_json(d, cert) is False

    def test_trail_broken_alternation(self):
        d = complete_digraph(3)
        w = forward_trail(d, 0, 1)
        flipped = [not b for b in w.forward]
        cert = envelope(
            "trail",
            d,
            {
                "mode": "forward-trail",
                "x": w.x,
                "y": w.y,
                "arcs": list(w.arcs),
                "forward": flipped,
            },
        )
        assert verify_certificate_json(d, cert) is False

    def test_antipath_must_be_vertex_simple(self):
        d = Digraph(4, ((0, 1), (2, 1), (2, 3), (0, 3)))
        # closed antidirected trail 0-1-2-3-0: fine as a trail, not a path
        cert = envelope(
            "trail",
            d,
            {
                "mode": "antipath",
                "x": 0,
                "y": 0,
                "arcs": [0, 1, 2, 3],
                "forward": [True, False, True, False],
            },
        )
        assert verify_certificate_json(d, cert) is False

    def test_partition_not_covering(self):
        g = complete_graph(4)
        cert = envelope("partition-certificate", g, {"parts": [[0, 1], [2]]})
        assert verify_certificate_json(g, cert) is False

    def test_partition_without_the_gap(self):
        g = complete_graph(5)  # orientable, so no partition can certify
        cert = envelope(
            "partition-certificate", g, {"parts": [[v] for v in range(5)]}
        )
        assert verify_certificate_json(g, cert) is False

    def test_decomposition_overlap(self):
        g = complete_graph(4)
        cert = envelope(
            "decomposition",
            g,
            {"feasible": True, "black": [0, 1, 2], "red": [2, 3, 4, 5]},
        )
        assert verify_certificate_json(g, cert) is False

    def test_decomposition_weak_deficiency_witness(self):
        g = complete_graph(4)
        cert = envelope("decomposition", g, {"feasible": False, "deficiency": [0]})
        assert verify_certificate_json(g, cert) is False

    def test_pack_overlapping_classes(self):
        d = complete_digraph(4)
        res = pack_antistrong(d, 1)
        cls = sorted(res.antistrong_classes[0])
        leftover = sorted(res.leftover)
        cert = envelope(
            "pack",
            d,
            {
                "antistrong_classes": [cls],
                "connected_classes": [],
                "leftover": leftover + [cls[0]],
            },
        )
        assert verify_certificate_json(d, cert) is False

    def test_pack_class_not_antistrong(self):
        d = complete_digraph(4)
        cert = envelope(
            "pack",
            d,
            {
                "antistrong_classes": [[0]],
                "connected_classes": [],
                "leftover": sorted(set(range(12)) - {0}),
            },
        )
        assert verify_certificate_json(d, cert) is False

    def test_augmentation_insufficient(self):
        d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
        cert = envelope("augmentation", d, {"new_arcs": []})
        assert verify_certificate_json(d, cert) is False

    def test_augmentation_duplicates_existing_arc(self):
        d = Digraph(3, ((0, 1), (1, 2), (2, 0)))
        cert = envelope("augmentation", d, {"new_arcs": [[0, 1], [1, 0]]})
        assert verify_certificate_json(d, cert) is False

    def test_detachment_wrong_edge_count(self):
        g = complete_graph(5)
        det = good_2_detachment(g)
        cert = envelope(
            "detachment", g, {"edges": [list(e) for e in det.edges][:-1]}
        )
        assert verify_certificate_json(g, cert) is False


class TestSchemaRejects:
    def _good(self):
        g = complete_graph(5)
        out = antistrong_orientation(g)
        return g, envelope(
            "orientation", g, {"mode": "antistrong", "arcs": [list(a) for a in out.arcs]}
        )

    def test_missing_envelope_field(self):
        g, cert = self._good()
        del cert["input_sha256"]
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_extra_envelope_field(self):
        g, cert = self._good()
        cert["note"] = "tamper"
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_wrong_schema_version(self):
        g, cert = self._good()
        cert["schema_version"] = SCHEMA + ".beta"
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_unknown_kind(self):
        g, cert = self._good()
        cert["kind"] = "magic"
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_malformed_payload(self):
        g, cert = self._good()
        cert["payload"] = {"mode": "antistrong"}  # arcs missing
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_payload_with_wrong_shapes(self):
        g, cert = self._good()
        cert["payload"] = {"mode": "antistrong", "arcs": [[0], [1]]}
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, cert)

    def test_not_a_mapping(self):
        g, _ = self._good()
        with pytest.raises(SchemaMismatch):
            verify_certificate_json(g, 7)
