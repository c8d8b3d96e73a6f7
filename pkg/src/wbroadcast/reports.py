"""Report builders behind the command-line interface.

Builds plain dict/list payloads (serialized elsewhere as JSON) for
single runs, claim verification, fixture dumps, and CSV parameter
sweeps. Payload field order is fixed by construction and every number
is a finite double, so identical configs yield byte-identical output.

The verification report compares oracle values, always produced by
the protocol simulation plus partial traces and never by the printed
formulas, against the transcribed fixtures, and records distances and
booleans without asserting which side is right. The one claim whose
printed operator no outcome reproduces gets a per-outcome audit with
both bit conventions and all label alignments, so the record shows
exactly what was measured.
"""

import csv
import io
import math
import numbers
from array import array
from dataclasses import dataclass

from wbroadcast import fixtures as fx
from wbroadcast import linalg
from wbroadcast.backend import kernels
from wbroadcast.cloning import (
    CloningMachine,
    Outcome,
    branch_reduced,
    enumerate_outcomes,
    run_protocol,
)
from wbroadcast.errors import ConfigError, WBroadcastError
from wbroadcast.linalg import CMatrix
from wbroadcast.separability import (
    Bipartition,
    bipartite_cuts,
    label_alignments,
    peres_horodecki,
    ppt,
    w_structure,
)
from wbroadcast.states import (
    QubitLabel,
    WParams,
    fidelity_pure,
    relabel,
    w_state,
)

SCHEMA_VERSION = "1"
CLASSICAL_EXCHANGE = "modeled-as-secret"
DEFAULT_TOL = 1e-9

SWEEP_HEADER = (
    "alpha,beta,gamma,x,y,p_up_up_up,fidelity_rho156_w,"
    "min_ppt_cut1,min_ppt_cut2,min_ppt_cut3,w3_rho14,w4_rho14,"
    "subspace_weight_rho156"
)

SWEEP_METRICS = (
    "p_up_up_up",
    "fidelity_rho156_w",
    "min_ppt_cut1",
    "min_ppt_cut2",
    "min_ppt_cut3",
    "w3_rho14",
    "w4_rho14",
    "subspace_weight_rho156",
)

_CONFIG_KEYS = ("alpha", "beta", "gamma", "x", "y", "tol", "outcome")
_SWEEP_KEYS = ("alpha", "beta", "x", "y", "tol", "metrics")


def _require_real(mapping, key):
    if key not in mapping:
        raise ConfigError("missing required field %r" % (key,))
    v = mapping[key]
    if isinstance(v, bool) or not isinstance(v, numbers.Real):
        raise ConfigError("field %r must be a real number, got %r" % (key, v))
    v = float(v)
    if not math.isfinite(v):
        raise ConfigError("field %r must be finite" % (key,))
    return v


@dataclass(frozen=True)
class ProtocolConfig:
    """One protocol instance: input coefficients, machine, tolerance."""

    alpha: float
    beta: float
    gamma: float
    x: float
    y: float
    tol: float = DEFAULT_TOL
    outcome_filter: Outcome = None

    @classmethod
    def from_mapping(cls, mapping, tol_override=None, outcome_override=None):
        if not isinstance(mapping, dict):
            raise ConfigError("config must be a JSON object")
        unknown = sorted(set(mapping) - set(_CONFIG_KEYS))
        if unknown:
            raise ConfigError("unknown config fields: %s" % (", ".join(unknown),))
        vals = {k: _require_real(mapping, k) for k in ("alpha", "beta", "gamma", "x", "y")}
        tol = mapping.get("tol", DEFAULT_TOL)
        if tol_override is not None:
            tol = tol_override
        if isinstance(tol, bool) or not isinstance(tol, numbers.Real):
            raise ConfigError("tol must be a real number, got %r" % (tol,))
        tol = float(tol)
        if not math.isfinite(tol) or tol <= 0.0:
            raise ConfigError("tol must be positive and finite, got %r" % (tol,))
        outcome = mapping.get("outcome")
        if outcome_override is not None:
            outcome = outcome_override
        flt = None
        if outcome is not None:
            try:
                flt = Outcome.from_code(outcome)
            except WBroadcastError as e:
                raise ConfigError(str(e)) from e
        cfg = cls(
            alpha=vals["alpha"],
            beta=vals["beta"],
            gamma=vals["gamma"],
            x=vals["x"],
            y=vals["y"],
            tol=tol,
            outcome_filter=flt,
        )
        try:
            cfg.wparams()
            cfg.machine()
        except WBroadcastError as e:
            raise ConfigError(str(e)) from e
        return cfg

    def wparams(self):
        return WParams(self.alpha, self.beta, self.gamma)

    def machine(self):
        return CloningMachine(self.x, self.y)

    def payload(self):
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "x": self.x,
            "y": self.y,
            "tol": self.tol,
            "outcome_filter": None
            if self.outcome_filter is None
            else self.outcome_filter.code,
        }


@dataclass(frozen=True)
class SweepSpec:
    """Grids for the input coefficients and machine parameters.

    gamma is derived per point as sqrt(1 - alpha^2 - beta^2); points
    with no real solution, and machines that cannot be normalized, are
    skipped and counted. metrics limits which CSV cells are computed;
    the header never changes, unselected cells hold nan.
    """

    alpha: tuple
    beta: tuple
    x: tuple
    y: tuple
    tol: float = DEFAULT_TOL
    metrics: tuple = SWEEP_METRICS

    @classmethod
    def from_mapping(cls, mapping, tol_override=None):
        if not isinstance(mapping, dict):
            raise ConfigError("sweep spec must be a JSON object")
        unknown = sorted(set(mapping) - set(_SWEEP_KEYS))
        if unknown:
            raise ConfigError("unknown sweep fields: %s" % (", ".join(unknown),))
        grids = {}
        for key in ("alpha", "beta", "x", "y"):
            if key not in mapping:
                raise ConfigError("missing required grid %r" % (key,))
            raw = mapping[key]
            if not isinstance(raw, list) or not raw:
                raise ConfigError("grid %r must be a nonempty list" % (key,))
            vals = []
            for v in raw:
                if isinstance(v, bool) or not isinstance(v, numbers.Real):
                    raise ConfigError(
                        "grid %r must contain real numbers, got %r" % (key, v)
                    )
                f = float(v)
                if not math.isfinite(f):
                    raise ConfigError("grid %r must contain finite numbers" % (key,))
                vals.append(f)
            grids[key] = tuple(vals)
        tol = mapping.get("tol", DEFAULT_TOL)
        if tol_override is not None:
            tol = tol_override
        if isinstance(tol, bool) or not isinstance(tol, numbers.Real):
            raise ConfigError("tol must be a real number, got %r" % (tol,))
        tol = float(tol)
        if not math.isfinite(tol) or tol <= 0.0:
            raise ConfigError("tol must be positive and finite, got %r" % (tol,))
        metrics = mapping.get("metrics")
        if metrics is None:
            chosen = SWEEP_METRICS
        else:
            if not isinstance(metrics, list) or not metrics:
                raise ConfigError("metrics must be a nonempty list of metric names")
            unknown = sorted(set(metrics) - set(SWEEP_METRICS))
            if unknown:
                raise ConfigError("unknown metrics: %s" % (", ".join(map(str, unknown)),))
            chosen = tuple(m for m in SWEEP_METRICS if m in set(metrics))
        return cls(
            alpha=grids["alpha"],
            beta=grids["beta"],
            x=grids["x"],
            y=grids["y"],
            tol=tol,
            metrics=chosen,
        )


def _pair(z):
    return [z.real, z.imag]


def _labels_payload(labels):
    return [l.value for l in labels]


def _ket_payload(buf, dim):
    return [[buf[2 * i], buf[2 * i + 1]] for i in range(dim)]


def _matrix_payload(cm):
    return [[_pair(cm.at(r, c)) for c in range(cm.cols)] for r in range(cm.rows)]


def _w_structure_payload(ws):
    return {
        "subspace_weight": ws.subspace_weight,
        "eigenvalues": list(ws.eigenvalues),
        "rank1_w_type": ws.rank1_w_type,
        "coherences": list(ws.coherences),
        "restriction": _matrix_payload(ws.restriction),
    }


def _ppt_payload(res):
    return {
        "min_eigenvalue": res.min_eigenvalue,
        "negativity": res.negativity,
        "inseparable": res.inseparable,
        "conclusive": res.conclusive,
    }


def _cut_name(labels, i):
    rest = [l.value for j, l in enumerate(labels) if j != i]
    return "%s|%s" % (labels[i].value, ",".join(rest))


def _ppt_cuts_payload(rho, tol):
    cuts = bipartite_cuts(rho, tol)
    return [
        dict([("cut", _cut_name(rho.labels, i))] + list(_ppt_payload(r).items()))
        for i, r in enumerate(cuts)
    ]


_R156 = set(fx.RHO156_LABELS)
_R234 = set(fx.RHO234_LABELS)
_R14 = set(fx.RHO14_LABELS)
_R25 = set(fx.RHO25_LABELS)
_R36 = set(fx.RHO36_LABELS)


def _three_qubit_block(rho, tol):
    return {
        "labels": _labels_payload(rho.labels),
        "weight": rho.weight,
        "matrix": _matrix_payload(rho.matrix),
        "w_structure": _w_structure_payload(w_structure(rho, tol)),
        "ppt_cuts": _ppt_cuts_payload(rho, tol),
    }


def _pair_block(rho, tol):
    ph = peres_horodecki(rho, tol)
    cut = Bipartition({rho.labels[0]}, {rho.labels[1]})
    return {
        "labels": _labels_payload(rho.labels),
        "weight": rho.weight,
        "matrix": _matrix_payload(rho.matrix),
        "w3": ph.w3,
        "w4": ph.w4,
        "inseparable": ph.inseparable,
        "ppt": _ppt_payload(ppt(rho, cut, tol)),
    }


def _branch_reductions(branch):
    """Weighted reduced operators for one branch, presentation order."""
    r156 = branch_reduced(branch, _R156, weighted=True)
    r234 = relabel(branch_reduced(branch, _R234, weighted=True), fx.RHO234_LABELS)
    r14 = branch_reduced(branch, _R14, weighted=True)
    r25 = branch_reduced(branch, _R25, weighted=True)
    r36 = branch_reduced(branch, _R36, weighted=True)
    return r156, r234, r14, r25, r36


def _branch_analyses(branch, p, tol):
    r156, r234, r14, r25, r36 = _branch_reductions(branch)
    fid = fidelity_pure(r156, w_state(p, fx.RHO156_LABELS))
    return {
        "rho156": _three_qubit_block(r156, tol),
        "rho234": _three_qubit_block(r234, tol),
        "rho14": _pair_block(r14, tol),
        "rho25": _pair_block(r25, tol),
        "rho36": _pair_block(r36, tol),
        "fidelity_rho156_w": fid,
    }


def cmd_run(config):
    """Single protocol run: all branches plus per-branch analyses."""
    p = config.wparams()
    m = config.machine()
    s9 = run_protocol(p, m)
    branches = enumerate_outcomes(s9)
    prob_sum = 0.0
    for b in branches:
        prob_sum += b.probability
    records = []
    for b in branches:
        selected = (
            config.outcome_filter is None or b.outcome == config.outcome_filter
        )
        rec = {
            "outcome": b.outcome.code,
            "probability": b.probability,
            "down_count": b.outcome.down_count,
            "zero": b.is_zero,
            "state": None,
            "analyses": None,
        }
        if selected and not b.is_zero:
            rec["state"] = {
                "labels": _labels_payload(b.state.labels),
                "amplitudes": _ket_payload(b.state._buf, b.state.dim),
            }
            rec["analyses"] = _branch_analyses(b, p, config.tol)
        records.append(rec)
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "run",
        "classical_exchange": CLASSICAL_EXCHANGE,
        "config": config.payload(),
        "probability_sum": prob_sum,
        "branches": records,
    }


def _ket_distance(buf_a, buf_b, dim):
    a = CMatrix._wrap(dim, 1, buf_a)
    b = CMatrix._wrap(dim, 1, buf_b)
    return linalg.frobenius_distance(a, b)


def _unnormalized_ket(branch, dim):
    buf = array("d", bytes(16 * dim))
    if branch.state is not None:
        kernels().scale(
            branch.state._buf, math.sqrt(branch.probability), 0.0, dim, buf
        )
    return buf


def _fixture_ket_payload(kf):
    return {
        "labels": _labels_payload(kf.labels),
        "amplitudes": [_pair(complex(a)) for a in kf.amplitudes],
        "weight": kf.weight,
    }


def _fixture_op_payload(of):
    return {
        "labels": _labels_payload(of.labels),
        "matrix": _matrix_payload(of.matrix),
        "weight": of.weight,
    }


def _claim_eq6(branch, kf, tol):
    dim = len(kf.amplitudes)
    oracle_buf = _unnormalized_ket(branch, dim)
    fix_buf = array("d", bytes(16 * dim))
    for i, a in enumerate(kf.amplitudes):
        z = complex(a)
        fix_buf[2 * i] = z.real
        fix_buf[2 * i + 1] = z.imag
    dist = _ket_distance(oracle_buf, fix_buf, dim)
    fid = None
    if branch.state is not None and kf.weight > 0.0:
        inv = 1.0 / math.sqrt(kf.weight)
        acc = 0.0 + 0.0j
        st = branch.state._buf
        for i in range(dim):
            f = complex(fix_buf[2 * i], fix_buf[2 * i + 1]) * inv
            s = complex(st[2 * i], st[2 * i + 1])
            acc += f.conjugate() * s
        fid = abs(acc) ** 2
    return {
        "claim_id": kf.claim_id,
        "kind": "ket",
        "outcome": branch.outcome.code,
        "zero_branch": branch.is_zero,
        "fixture": _fixture_ket_payload(kf),
        "oracle": {
            "labels": _labels_payload(kf.labels),
            "amplitudes": _ket_payload(oracle_buf, dim),
            "weight": branch.probability,
        },
        "frobenius_distance": dist,
        "matches": dist <= tol,
        "aux": {
            "fidelity": fid,
            "probability_oracle": branch.probability,
            "probability_fixture": kf.weight,
        },
    }


def _claim_operator(branch, of, oracle, tol, aux_extra):
    """Generic weighted-operator claim record.

    oracle is a reduced density matrix, or None for a zero branch, in
    which case the oracle side is the zero operator of the right shape.
    """
    if oracle is None:
        dim = of.matrix.rows
        omat = CMatrix.zeros(dim, dim)
        oweight = branch.probability
        olabels = of.labels
    else:
        omat = oracle.matrix
        oweight = oracle.weight
        olabels = oracle.labels
    dist = linalg.frobenius_distance(omat, of.matrix)
    rec = {
        "claim_id": of.claim_id,
        "kind": "operator",
        "outcome": branch.outcome.code,
        "zero_branch": branch.is_zero,
        "fixture": _fixture_op_payload(of),
        "oracle": {
            "labels": _labels_payload(olabels),
            "matrix": _matrix_payload(omat),
            "weight": oweight,
        },
        "frobenius_distance": dist,
        "matches": dist <= tol,
        "aux": aux_extra,
    }
    return rec


def _claim_step4(branch, pairs, tol):
    """Determinant-vector claim: both published determinants vanish for
    every local pair, and each pair is separable."""
    if branch.is_zero:
        return {
            "claim_id": fx.CLAIM_STEP4,
            "kind": "determinant_vector",
            "outcome": branch.outcome.code,
            "zero_branch": True,
            "fixture": {"values": [0.0] * 6},
            "oracle": None,
            "frobenius_distance": None,
            "matches": True,
            "aux": {"vacuous": True},
        }
    values = []
    ppt_mins = []
    verdicts = []
    for rho in pairs:
        ph = peres_horodecki(rho, tol)
        values.extend([ph.w3, ph.w4])
        res = ppt(rho, Bipartition({rho.labels[0]}, {rho.labels[1]}), tol)
        ppt_mins.append(res.min_eigenvalue)
        verdicts.append(not res.inseparable and not ph.inseparable)
    fix = CMatrix.zeros(1, 6)
    got = CMatrix.from_rows([values])
    dist = linalg.frobenius_distance(got, fix)
    return {
        "claim_id": fx.CLAIM_STEP4,
        "kind": "determinant_vector",
        "outcome": branch.outcome.code,
        "zero_branch": False,
        "fixture": {"values": [0.0] * 6},
        "oracle": {"values": values},
        "frobenius_distance": dist,
        "matches": dist <= tol,
        "aux": {
            "vacuous": False,
            "pairs": ["rho14", "rho25", "rho36"],
            "ppt_min_eigenvalues": ppt_mins,
            "separable": verdicts,
        },
    }


def _operator_aux(rho, tol, three_qubit):
    if rho is None:
        return {"analyses": None}
    if three_qubit:
        return {
            "analyses": {
                "w_structure": _w_structure_payload(w_structure(rho, tol)),
                "ppt_cuts": _ppt_cuts_payload(rho, tol),
            }
        }
    ph = peres_horodecki(rho, tol)
    res = ppt(rho, Bipartition({rho.labels[0]}, {rho.labels[1]}), tol)
    return {
        "analyses": {
            "w3": ph.w3,
            "w4": ph.w4,
            "inseparable": ph.inseparable,
            "ppt": _ppt_payload(res),
        }
    }


def _audit_block(rho, of, tol):
    """Distances and structure metrics for one reduced operator against
    the printed three-qubit fixture."""
    dist_w = linalg.frobenius_distance(rho.matrix, of.matrix)
    if of.weight > 0.0:
        fix_n = linalg.scale(of.matrix, 1.0 / of.weight)
        dist_n = linalg.frobenius_distance(
            linalg.scale(rho.matrix, 1.0 / rho.weight), fix_n
        )
    else:
        dist_n = None
    reversed_rho = relabel(rho, tuple(reversed(rho.labels)))
    dist_rev = linalg.frobenius_distance(reversed_rho.matrix, of.matrix)
    return {
        "labels": _labels_payload(rho.labels),
        "weight": rho.weight,
        "distance_weighted": dist_w,
        "distance_normalized": dist_n,
        "distance_bit_reversed": dist_rev,
        "w_structure": _w_structure_payload(w_structure(rho, tol)),
        "ppt_cuts": _ppt_cuts_payload(rho, tol),
    }


def _alignment_payload(r156, r234_natural):
    """Frobenius distance between the two three-qubit reductions under
    every ordering of the second label set; orderings pair positionally
    with the first operator's labels."""
    dists = {}
    best_name = None
    best = None
    for perm in label_alignments(set(fx.RHO234_LABELS)):
        aligned = relabel(r234_natural, perm)
        d = linalg.frobenius_distance(r156.matrix, aligned.matrix)
        name = ",".join(l.value for l in perm)
        dists[name] = d
        if best is None or d < best:
            best = d
            best_name = name
    return {
        "distances": dists,
        "min_distance": best,
        "best_alignment": best_name,
    }


def cmd_verify(config):
    """Compare every transcribed fixture against the simulation."""
    p = config.wparams()
    m = config.machine()
    tol = config.tol
    branches = enumerate_outcomes(run_protocol(p, m))
    uuu = branches[0]
    kf6 = fx.all_up_ket(p, m)
    f156 = fx.w_projector_156(p, m)
    f234 = fx.w_projector_234(p, m)
    f14 = fx.local_pair_14(p, m)
    f25 = fx.local_pair_25(p, m)
    f36 = fx.local_pair_36(p, m)
    if uuu.is_zero:
        r156 = r234 = r14 = r25 = r36 = None
    else:
        r156, r234, r14, r25, r36 = _branch_reductions(uuu)
    claims = [
        _claim_eq6(uuu, kf6, tol),
        _claim_operator(uuu, f156, r156, tol, _operator_aux(r156, tol, True)),
        _claim_operator(uuu, f234, r234, tol, _operator_aux(r234, tol, True)),
        _claim_operator(uuu, f14, r14, tol, _operator_aux(r14, tol, False)),
        _claim_operator(uuu, f25, r25, tol, _operator_aux(r25, tol, False)),
        _claim_operator(uuu, f36, r36, tol, _operator_aux(r36, tol, False)),
        _claim_step4(uuu, None if uuu.is_zero else (r14, r25, r36), tol),
    ]
    audit = []
    for b in branches:
        rec = {
            "outcome": b.outcome.code,
            "probability": b.probability,
            "down_count": b.outcome.down_count,
            "zero": b.is_zero,
            "rho156": None,
            "rho234": None,
            "alignment_156_vs_234": None,
        }
        if not b.is_zero:
            b156 = branch_reduced(b, _R156, weighted=True)
            b234_nat = branch_reduced(b, _R234, weighted=True)
            b234 = relabel(b234_nat, fx.RHO234_LABELS)
            rec["rho156"] = _audit_block(b156, f156, tol)
            rec["rho234"] = _audit_block(b234, f234, tol)
            rec["alignment_156_vs_234"] = _alignment_payload(b156, b234_nat)
        audit.append(rec)
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "verify",
        "classical_exchange": CLASSICAL_EXCHANGE,
        "config": config.payload(),
        "claims": claims,
        "eq7_outcome_audit": audit,
    }


def cmd_fixtures(config):
    """Dump every printed fixture at the configured parameters."""
    p = config.wparams()
    m = config.machine()
    records = []
    for f in fx.all_fixtures(p, m):
        rec = {
            "claim_id": f.claim_id,
            "source": f.source,
        }
        if isinstance(f, fx.KetFixture):
            rec["kind"] = "ket"
            rec.update(_fixture_ket_payload(f))
        else:
            rec["kind"] = "operator"
            rec.update(_fixture_op_payload(f))
        records.append(rec)
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "fixtures",
        "classical_exchange": CLASSICAL_EXCHANGE,
        "config": config.payload(),
        "fixtures": records,
    }


def _sweep_point(p, m, spec):
    """Metric cells for one grid point; nan marks unavailable values."""
    nan = float("nan")
    cells = {name: nan for name in SWEEP_METRICS}
    chosen = set(spec.metrics)
    branches = enumerate_outcomes(run_protocol(p, m))
    b0 = branches[0]
    if "p_up_up_up" in chosen:
        cells["p_up_up_up"] = b0.probability
    if b0.is_zero:
        return cells
    need_156 = chosen & {
        "fidelity_rho156_w",
        "min_ppt_cut1",
        "min_ppt_cut2",
        "min_ppt_cut3",
        "subspace_weight_rho156",
    }
    if need_156:
        r156 = branch_reduced(b0, _R156, weighted=True)
        if "fidelity_rho156_w" in chosen:
            cells["fidelity_rho156_w"] = fidelity_pure(
                r156, w_state(p, fx.RHO156_LABELS)
            )
        if chosen & {"min_ppt_cut1", "min_ppt_cut2", "min_ppt_cut3"}:
            cuts = bipartite_cuts(r156, spec.tol)
            cells["min_ppt_cut1"] = cuts[0].min_eigenvalue
            cells["min_ppt_cut2"] = cuts[1].min_eigenvalue
            cells["min_ppt_cut3"] = cuts[2].min_eigenvalue
            for i, name in enumerate(("min_ppt_cut1", "min_ppt_cut2", "min_ppt_cut3")):
                if name not in chosen:
                    cells[name] = nan
        if "subspace_weight_rho156" in chosen:
            cells["subspace_weight_rho156"] = w_structure(
                r156, spec.tol
            ).subspace_weight
    if chosen & {"w3_rho14", "w4_rho14"}:
        r14 = branch_reduced(b0, _R14, weighted=True)
        ph = peres_horodecki(r14, spec.tol)
        if "w3_rho14" in chosen:
            cells["w3_rho14"] = ph.w3
        if "w4_rho14" in chosen:
            cells["w4_rho14"] = ph.w4
    return cells


def cmd_sweep(spec):
    """CSV over the grid; returns (text, skipped_point_count)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER.split(","))
    skipped = 0
    emitted = 0
    for a in spec.alpha:
        for b in spec.beta:
            g2 = 1.0 - a * a - b * b
            if g2 < -1e-12:
                skipped += len(spec.x) * len(spec.y)
                continue
            g = math.sqrt(g2) if g2 > 0.0 else 0.0
            try:
                p = WParams(a, b, g)
            except WBroadcastError:
                skipped += len(spec.x) * len(spec.y)
                continue
            for x in spec.x:
                for y in spec.y:
                    try:
                        m = CloningMachine(x, y)
                    except WBroadcastError:
                        skipped += 1
                        continue
                    cells = _sweep_point(p, m, spec)
                    writer.writerow(
                        [a, b, g, x, y] + [cells[n] for n in SWEEP_METRICS]
                    )
                    emitted += 1
    if emitted == 0:
        raise ConfigError("sweep grid produced no valid points")
    return out.getvalue(), skipped
