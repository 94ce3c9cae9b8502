"""Pure handlers behind the service endpoints; the CLI calls these in-process.

Handlers translate between wire models and the library, and never touch the
filesystem or the network. Domain errors surface as the library's ValueError
subclasses; the app and the CLI map them to HTTP statuses / exit codes.
"""

from __future__ import annotations

from fractions import Fraction

from .. import bounds as bnd
from ..bounds import BoundValue
from ..dissect import (
    count_dissections,
    count_triangulations,
    enumerate_dissections,
    estimate_qn,
    verify_bounds_over,
)
from ..embedding import (
    NotBiconnected,
    NotOuterplanar,
    interior_faces,
    recognize,
    verify_embedding,
)
from ..families import generate_family, nearest_valid_hnq_order
from ..graphs import check_classical_bounds, global_metrics
from ..textio import format_edge_list, format_embedding, parse_edge_list, parse_embedding
from ..witness import (
    WitnessCertificate,
    proximity_witness_embedded,
    radius_witness_embedded,
)
from .schemas import (
    AnalysisOutput,
    AnalyzeRequest,
    BoundCheckModel,
    BoundRequest,
    BoundResponse,
    ClassicalBoundsModel,
    EmbeddingModel,
    EnumerateRequest,
    EnumerateResponse,
    GenerateRequest,
    GenerateResponse,
    MetricsModel,
    QnReportModel,
    QnRequest,
    VerificationSummaryModel,
    VerifyRequest,
    WitnessCertificateModel,
    WitnessRequest,
    frac_decimal,
    frac_str,
)

__all__ = [
    "handle_analyze",
    "handle_generate",
    "handle_witness",
    "handle_bound",
    "handle_enumerate",
    "handle_verify",
    "handle_qn",
]


def _bound_check(name: str, value: Fraction, observed: Fraction, applicable: bool = True) -> BoundCheckModel:
    return BoundCheckModel(
        name=name,
        value=frac_str(value),
        value_decimal=frac_decimal(value),
        observed=frac_str(observed),
        holds=observed <= value,
        gap=frac_str(value - observed),
        equal=observed == value,
        applicable=applicable,
    )


def handle_analyze(req: AnalyzeRequest) -> AnalysisOutput:
    g = parse_edge_list(req.edges_text)
    rep = global_metrics(g)
    classical = check_classical_bounds(g)
    metrics = MetricsModel(
        transmission=list(rep.transmission),
        eccentricity=list(rep.eccentricity),
        proximity=frac_str(rep.proximity),
        proximity_decimal=frac_decimal(rep.proximity),
        remoteness=frac_str(rep.remoteness),
        remoteness_decimal=frac_decimal(rep.remoteness),
        radius=rep.radius,
        diameter=rep.diameter,
        medians=list(rep.medians),
        centers=list(rep.centers),
    )
    classical_model = ClassicalBoundsModel(
        pi_upper=frac_str(classical.pi_upper),
        pi_upper_holds=classical.pi_upper_holds,
        pi_upper_equal=classical.pi_upper_equal,
        pi_lower_equal=classical.pi_lower_equal,
        has_universal_vertex=classical.has_universal_vertex,
        is_path=classical.is_path,
        is_cycle=classical.is_cycle,
        rho_upper=frac_str(Fraction(g.n, 2)),
        rho_upper_holds=classical.rho_upper_holds,
        rho_upper_equal=classical.rho_upper_equal,
        rad_upper_holds=classical.rad_upper_holds,
    )

    status = "ok"
    detail = None
    emb = None
    if req.embedding_text is not None:
        candidate = parse_embedding(req.embedding_text)
        check = verify_embedding(g, candidate)
        if not check.ok:
            raise NotOuterplanar(f"supplied embedding rejected: {check.reason}")
        emb = candidate
    else:
        try:
            emb = recognize(g)
        except NotBiconnected as exc:
            status, detail = "not_biconnected", str(exc)
        except NotOuterplanar as exc:
            status, detail = "not_outerplanar", str(exc)

    embedding_model = None
    q = None
    op_bounds = None
    if emb is not None:
        faces = interior_faces(emb)
        q = max(f.length for f in faces)
        embedding_model = EmbeddingModel(outer=list(emb.outer), chords=[list(c) for c in emb.chords])
        op_bounds = [
            _bound_check("proximity_2connected", bnd.prox_bound_2conn(g.n, q), rep.proximity),
            _bound_check("remoteness_outerplanar", bnd.remoteness_bound(g.n), rep.remoteness),
        ]
        if q == 3:
            op_bounds.insert(1, _bound_check("proximity_mop", bnd.prox_bound_mop(g.n), rep.proximity))
        op_bounds.append(
            _bound_check(
                "radius_bounded_faces",
                Fraction(bnd.radius_bound(g.n)),
                Fraction(rep.radius),
                applicable=4 * q <= g.n + 2,
            )
        )
        if q == 3:
            lo, hi = bnd.chordal_radius_interval(rep.diameter)
            op_bounds.append(
                BoundCheckModel(
                    name="chordal_radius_window",
                    value=f"{lo}/1",
                    value_decimal=frac_decimal(Fraction(lo)),
                    observed=frac_str(Fraction(rep.radius)),
                    holds=lo <= rep.radius <= hi,
                    gap=frac_str(Fraction(hi - rep.radius)),
                    equal=rep.radius in (lo, hi),
                )
            )

    return AnalysisOutput(
        input=req.input_name,
        status=status,
        status_detail=detail,
        n=g.n,
        m=g.m,
        metrics=metrics,
        classical=classical_model,
        embedding=embedding_model,
        q=q,
        outerplanar_bounds=op_bounds,
    )


def handle_generate(req: GenerateRequest) -> GenerateResponse:
    n = req.n
    note = None
    if req.family == "hnq":
        if req.q is None:
            raise ValueError("family hnq needs --q")
        if req.nearest:
            fixed = nearest_valid_hnq_order(n, req.q)
            if fixed != n:
                note = f"order adjusted from {n} to nearest valid {fixed} (n - q must be a multiple of 4)"
                n = fixed
    gg = generate_family(req.family, n, req.q)
    return GenerateResponse(
        family=gg.family,
        n=gg.graph.n,
        params=gg.params,
        labels=list(gg.labels),
        edges_text=format_edge_list(gg.graph),
        embedding_text=format_embedding(gg.embedding) if gg.embedding is not None else None,
        note=note,
    )


def _certificate_model(cert: WitnessCertificate) -> WitnessCertificateModel:
    return WitnessCertificateModel(
        kind=cert.kind,
        vertex=cert.vertex,
        exact_value=cert.exact_value,
        guaranteed_bound_times8=cert.guaranteed_bound_times8,
        holds=cert.holds,
        case_tag=cert.case_tag,
        n=cert.n,
        k=cert.k,
        q=cert.q,
        p=list(cert.p),
        ell=cert.ell,
        j=cert.j,
    )


def handle_witness(req: WitnessRequest) -> WitnessCertificateModel:
    g = parse_edge_list(req.edges_text)
    emb = recognize(g)
    if req.kind == "proximity":
        cert = proximity_witness_embedded(g, emb)
    else:
        cert = radius_witness_embedded(g, emb)
    return _certificate_model(cert)


_BOUND_SOURCES = {
    "prox2c": "proximity-2connected-outerplanar",
    "proxmop": "proximity-maximal-outerplanar",
    "rho": "remoteness-outerplanar",
    "rad": "radius-bounded-faces",
    "chordal": "chordal-radius-diameter-window",
}


def handle_bound(req: BoundRequest) -> BoundResponse:
    which = req.which
    bound = None
    interval = None
    if which == "prox2c":
        if req.q is None:
            raise ValueError("prox2c needs q")
        bound = BoundValue(value=bnd.prox_bound_2conn(req.n, req.q), source=_BOUND_SOURCES[which], n=req.n, q=req.q)
    elif which == "proxmop":
        bound = BoundValue(value=bnd.prox_bound_mop(req.n), source=_BOUND_SOURCES[which], n=req.n)
    elif which == "rho":
        bound = BoundValue(value=bnd.remoteness_bound(req.n), source=_BOUND_SOURCES[which], n=req.n)
    elif which == "rad":
        bound = BoundValue(value=Fraction(bnd.radius_bound(req.n)), source=_BOUND_SOURCES[which], n=req.n)
    else:  # chordal: n is read as the diameter
        interval = list(bnd.chordal_radius_interval(req.n))
    return BoundResponse(
        which=which,
        source=_BOUND_SOURCES[which],
        n=req.n,
        q=req.q,
        value=frac_str(bound.value) if bound is not None else None,
        value_decimal=frac_decimal(bound.value) if bound is not None else None,
        interval=interval,
    )


def handle_enumerate(req: EnumerateRequest) -> EnumerateResponse:
    max_face = 3 if req.mops else req.max_face
    graphs = None
    count = 0
    if req.out == "graphs":
        graphs = []
        for d in enumerate_dissections(
            req.n, max_face=req.max_face, triangulations_only=req.mops, up_to_symmetry=req.canonical
        ):
            count += 1
            if len(graphs) >= req.graph_limit:
                raise ValueError(f"more than {req.graph_limit} graphs; raise graph_limit or use counts")
            graphs.append([list(c) for c in d.chords])
    else:
        for d in enumerate_dissections(
            req.n, max_face=req.max_face, triangulations_only=req.mops, up_to_symmetry=req.canonical
        ):
            count += 1
    recursion = None
    catalan = None
    match = None
    if not req.canonical:
        recursion = count_dissections(req.n, max_face=max_face)
        match = recursion == count
        if req.mops:
            catalan = count_triangulations(req.n)
            match = match and catalan == count
    return EnumerateResponse(
        n=req.n,
        max_face=req.max_face,
        mops=req.mops,
        canonical=req.canonical,
        enumerated_count=count,
        recursion_count=recursion,
        catalan_count=catalan,
        counts_match=match,
        graphs=graphs,
    )


def handle_verify(req: VerifyRequest) -> VerificationSummaryModel:
    summary = verify_bounds_over(
        req.n,
        max_face=req.max_face,
        mode=req.mode,
        radius_cap=req.radius_cap,
        workers=req.workers,
    )
    return VerificationSummaryModel.model_validate(summary.to_payload())


def handle_qn(req: QnRequest) -> QnReportModel:
    report = estimate_qn(req.n, workers=req.workers)
    return QnReportModel.model_validate(report.to_payload())
