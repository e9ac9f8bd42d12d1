"""Check name -> citation label carried by every report record.

Longest matching dotted prefix wins; unknown names get an empty label.
"""

ANCHORS = {
    "galois_pair": "Definition 2.1",
    "adjoint": "Lemma 2.1(1),(2)",
    "fiber": "Lemma 2.1(3),(4)",
    "lemma22": "Lemma 2.2",
    "dual_connection": "Lemma 2.3",
    "dual_connection.endpoints": "Lemma 2.3(1)",
    "dual_connection.steps": "Lemma 2.3(2)",
    "dual_connection.noncongruence": "Lemma 2.3(3)",
    "steps": "Proposition 2.1",
    "steps.psi_step": "Proposition 2.1(1)",
    "steps.fiber_size": "Proposition 2.1(2)",
    "steps.phi_gap_capped": "Proposition 2.1(3)",
    "steps.phi_gap": "Proposition 2.1(4)",
    "steps.phi_positive": "Proposition 2.1",
    "residues": "Lemma 2.4",
    "t21": "Theorem 2.1",
    "t22": "Theorem 2.2",
    "t22.s1": "Theorem 2.2(1)",
    "t22.s2": "Theorem 2.2(2)",
    "t22.s3": "Theorem 2.2(3)",
    "t22.s4": "Theorem 2.2(4)",
    "wei": "Eq. (1.3)",
    "forney": "Eq. (1.6)",
    "ghw.oracle": "Eq. (1.1)",
    "remark23": "Remark 2.3",
    "bridge.zero_level": "(3.1)",
    "bridge.slope": "(3.2)",
    "bridge.successor": "(3.3)",
    "bridge.predecessor": "(3.4)",
    "lemma31": "Lemma 3.1",
    "prop31": "Proposition 3.1",
    "prop31.phi_psi": "Proposition 3.1(1)",
    "prop31.psi_level": "Proposition 3.1(2)",
    "prop31.psi_steps": "Proposition 3.1(3)",
    "prop31.phi_gap": "Proposition 3.1(4)",
    "prop31.tau_eta": "Proposition 3.1(5)",
    "prop31.eta_level": "Proposition 3.1(6)",
    "t31": "Theorem 3.1",
    "t31.identity": "Theorem 3.1(1)",
    "t31.partition": "Theorem 3.1(2)",
    "abundance.monotone": "(3.11)",
    "abundance.successor": "(3.12)",
    "abundance.predecessor": "(3.13)",
    "t32": "Theorem 3.2",
    "t32.f_bounds": "Theorem 3.2",
    "t32.identity": "Theorem 3.2(1)",
    "t32.partition": "Theorem 3.2(2)",
    "ex31": "Example 3.1",
    "ex31.order_reversing": "(3.14)",
    "demimatroid": "Definition 4.1",
    "prop41": "Proposition 4.1",
    "family": "Section 4 abundance",
    "prop42": "Proposition 4.2",
    "remark43": "Remark 4.3",
    "t41": "Theorem 4.1",
    "t41.identity": "Theorem 4.1(1)",
    "t41.partition": "Theorem 4.1(2)",
    "t42": "Theorem 4.2",
    "t42.dual_ideals": "Theorem 4.2",
    "t42.identity": "Theorem 4.2(1)",
    "t42.partition": "Theorem 4.2(2)",
    "polymatroid": "Definition 5.1",
    "subspace_family": "Definition 5.2",
    "cor51": "Corollary 5.1",
    "annihilator": "(5.7)-(5.8)",
    "dual_polymatroid": "Section 5.2",
    "t51": "Theorem 5.1",
    "t51.identity": "Theorem 5.1(1)",
    "t51.partition": "Theorem 5.1(2)",
    "prop61": "Proposition 6.1",
    "prop61.f0": "Proposition 6.1(1)",
    "prop61.f1": "Proposition 6.1(2)",
    "prop61.f2": "Proposition 6.1(3)",
    "flags.common_k": "(7.1)",
    "remark71": "Remark 7.1",
    "remark71.odd_length": "Remark 7.1",
    "remark71.perp_closed": "Remark 7.1(1)",
    "lemma71": "Lemma 7.1",
    "prop71": "Proposition 7.1",
    "prop71.h0": "Proposition 7.1(1)",
    "prop71.h1": "Proposition 7.1(2)",
    "prop71.h2": "Proposition 7.1(3)",
    "t71": "Theorem 7.1",
    "t72": "Theorem 7.2",
    "t72.identity": "Theorem 7.2(1)",
    "t72.partition": "Theorem 7.2(2)",
    "t73": "Theorem 7.3",
    "t73.identity": "Theorem 7.3(1)",
    "t73.partition": "Theorem 7.3(2)",
    "prop72": "Proposition 7.2",
    "lemma72": "Lemma 7.2",
    "prop73": "Proposition 7.3",
    "t74": "Theorem 7.4",
    "t74.weights": "Theorem 7.4(1)",
    "t74.profiles": "Theorem 7.4(2)",
    "t74.identity": "Theorem 7.4(3)",
    "t74.partition": "Theorem 7.4(4)",
}


def anchor_for(name):
    parts = name.split(".")
    for end in range(len(parts), 0, -1):
        key = ".".join(parts[:end])
        if key in ANCHORS:
            return ANCHORS[key]
    # names nested under a context prefix, e.g. "code.wei.partition"
    if len(parts) > 1:
        return anchor_for(".".join(parts[1:]))
    return ""
