"""One-off: compute the frozen audit values for the regression gate.

Prints package values next to oracle recomputations so the freeze is
cross-validated before the literals are pasted into the acceptance
test. Not collected by pytest (no test_ prefix).
"""

import numpy as np

from wbroadcast import reports

import oracle

A, B, G, X, Y = 0.6, 0.48, 0.64, 1.0, 0.5


def oracle_audit():
    """Oracle-side recomputation of the audit distances."""
    fix156 = oracle.w_projector(A, B, G, X, Y)
    out = {}
    for code in oracle.OUTCOME_CODES:
        prob, vec = oracle.branch(A, B, G, X, Y, code)
        if prob == 0.0:
            out[code] = None
            continue
        rho6 = np.outer(vec, vec.conj())
        # data vector order is D1 D4 D2 D5 D3 D6; rho156 keeps D1 D5 D6
        r156 = oracle.partial_trace_mat(rho6, 6, (0, 3, 5))
        dist_w = np.linalg.norm(r156 - fix156)
        pref = X ** 4 * Y ** 2 / (X * X + Y * Y) ** 3
        dist_n = np.linalg.norm(r156 / prob - fix156 / pref)
        out[code] = (prob, dist_w, dist_n)
    return out


def main():
    cfg = reports.ProtocolConfig.from_mapping(
        {"alpha": A, "beta": B, "gamma": G, "x": X, "y": Y}
    )
    payload = reports.cmd_verify(cfg)
    ora = oracle_audit()
    print("claims:")
    for c in payload["claims"]:
        print("    (%r, %r, %r)," % (c["claim_id"], c["matches"], c["frobenius_distance"]))
    print("audit:")
    for rec in payload["eq7_outcome_audit"]:
        code = rec["outcome"]
        if rec["zero"]:
            print("    (%r, %r, None, None, None, None)," % (code, rec["probability"]))
            continue
        blk = rec["rho156"]
        al = rec["alignment_156_vs_234"]
        print(
            "    (%r, %r, %r, %r, %r, %r),"
            % (
                code,
                rec["probability"],
                blk["distance_weighted"],
                blk["distance_normalized"],
                al["min_distance"],
                al["best_alignment"],
            )
        )
        want = ora[code]
        assert abs(rec["probability"] - want[0]) < 1e-9, code
        assert abs(blk["distance_weighted"] - want[1]) < 1e-9, code
        assert abs(blk["distance_normalized"] - want[2]) < 1e-9, code
    print("oracle cross-validation: OK")


if __name__ == "__main__":
    main()
