import json
from pathlib import Path

import jsonschema
import pytest

from antiramsey.certify import (
    FC_CHECKS,
    ForcesCertificate,
    InvalidWitness,
    Mode,
    PROPER,
    ar_d_upper_certificate,
    dk_scan,
    fc_membership_check,
    forces,
    smallest_forcing_multiplicity,
)
from antiramsey.colouring import EdgeColouring
from antiramsey.constructions import gadget, named_graph
from antiramsey.corpus import hosts, oracle_instances
from antiramsey.oracles import brute_forces
from antiramsey.patterns import pattern

SCHEMA = json.loads((Path(__file__).resolve().parent.parent / "docs" / "certificate.schema.json").read_text())


def test_mode_parsing():
    assert Mode.parse("proper") == PROPER
    assert Mode.parse("m=1") == PROPER
    assert Mode.parse("m=3").multiplicity == 3
    assert Mode.parse("palette=4").palette == 4
    assert str(Mode.parse(" palette = 4 ")) == "palette=4"
    with pytest.raises(ValueError):
        Mode.parse("rainbow")


def test_forces_examples():
    assert forces(named_graph("c3"), pattern("c3")).forces
    cert = forces(named_graph("c4"), pattern("c4"))
    assert cert.verdict == "witness_found" and cert.witness.colour_count == 2
    assert forces(named_graph("k24"), pattern("c4")).forces
    g = named_graph("nonmono")
    assert forces(g, pattern("c4"), Mode.palette_limited(4)).forces
    assert forces(g, pattern("c4"), PROPER).verdict == "witness_found"


def test_palette_monotonicity_not_assumed():
    g = named_graph("nonmono")
    verdicts = {q: forces(g, pattern("c4"), Mode.palette_limited(q)).verdict for q in (4, 5, 6, 14)}
    assert verdicts[4] == "forces"
    assert verdicts[14] == "witness_found"


@pytest.mark.parametrize("host,pat", oracle_instances(8))
def test_forces_matches_brute_force(host, pat):
    g = hosts()[host]
    assert forces(g, pattern(pat)).forces == brute_forces(g, named_graph(pat))


@pytest.mark.parametrize("host,pat", [("c5", "p4"), ("k4", "c4"), ("bull", "p3"), ("c6", "p3+k2"), ("k23", "c4")])
@pytest.mark.parametrize("mode", ["m=2", "palette=3", "palette=4"])
def test_other_modes_match_brute_force(host, pat, mode):
    g = named_graph(host)
    md = Mode.parse(mode)
    got = forces(g, pattern(pat), md).forces
    assert got == brute_forces(g, named_graph(pat), md.multiplicity, md.palette)


@pytest.mark.parametrize("host,pat", [("gadget:5,2", "c5"), ("k24", "c4"), ("nonmono", "c4"), ("k5", "bull")])
def test_restriction_keeps_verdict(host, pat):
    from antiramsey.constructions import resolve_graph
    g = resolve_graph(host)
    a = forces(g, pattern(pat))
    b = forces(g, pattern(pat), restrict=True)
    assert a.verdict == b.verdict


def test_d_values():
    assert smallest_forcing_multiplicity(3, 3) == 1
    assert smallest_forcing_multiplicity(4, 4) == 2
    assert smallest_forcing_multiplicity(5, 3) == 3
    assert smallest_forcing_multiplicity(5, 2) is None
    scan = dk_scan(4, 4)
    assert [d for d, _ in scan] == [1, 2] and scan[0][1].verdict == "witness_found"


def test_budget_gives_inconclusive():
    cert = forces(gadget(5, 3), pattern("c5"), max_nodes=50)
    assert cert.verdict == "inconclusive" and not cert.conclusive
    assert cert.stats.nodes > 50 - 1
    jsonschema.validate(cert.to_json(), SCHEMA)


@pytest.mark.parametrize("host,pat", [("gadget:5,3", "c5"), ("gadget:5,2", "c5"), ("nonmono", "c4"), ("c6", "p4")])
def test_workers_do_not_change_certificates(host, pat):
    from antiramsey.constructions import resolve_graph
    g = resolve_graph(host)
    seq = forces(g, pattern(pat)).to_json()
    par = forces(g, pattern(pat), workers=2).to_json()
    assert seq == par


def test_certificate_json_validates_against_schema():
    for g, h, mode in [(named_graph("nonmono"), "c4", PROPER), (named_graph("k24"), "c4", PROPER),
                       (named_graph("nonmono"), "c4", Mode.palette_limited(4)), (named_graph("c5"), "p4", Mode.m_bounded(2))]:
        doc = forces(g, pattern(h), mode).to_json()
        jsonschema.validate(doc, SCHEMA)
        assert json.loads(json.dumps(doc)) == doc


def test_witness_revalidated():
    g = named_graph("c4")
    with pytest.raises(InvalidWitness):
        ForcesCertificate("witness_found", g, pattern("c4"), PROPER, EdgeColouring(g, (1, 2, 3, 4)))
    with pytest.raises(InvalidWitness):
        ForcesCertificate("witness_found", g, pattern("c4"), PROPER, EdgeColouring(g, (1, 1, 2, 2)))


def test_upper_certificates():
    assert ar_d_upper_certificate(pattern("c4"), named_graph("k24")).bound == 4
    cert = ar_d_upper_certificate(pattern("p4"), named_graph("c5"))
    assert (cert.bound, cert.size_bound) == (2, 5)
    assert ar_d_upper_certificate(pattern("2k2"), named_graph("c5")).bound == 2
    assert ar_d_upper_certificate(pattern("c4"), named_graph("c4")).bound is None


def test_fc_membership():
    assert fc_membership_check("triangle_pendant_via_k4subdiv").forces
    assert fc_membership_check("bull_via_k5").forces
    assert fc_membership_check("bull_via_k4").verdict == "witness_found"
    assert set(FC_CHECKS) >= {"triangle_pendant_via_k4subdiv", "bull_via_k5"}
    with pytest.raises(ValueError):
        fc_membership_check("nope")
