"""Service handlers and the FastAPI application.

The handlers are plain functions on the pydantic models so the CLI can call
them in-process; the FastAPI routes are thin wrappers that translate package
errors into HTTP 400s. State is limited to the package-level group/table
caches, which fill idempotently, so concurrent requests are safe.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import serialize
from ..burnside import BurnsideElement, table_of_marks
from ..errors import GroupSpecError, WreathmarksError
from ..groups import (ConjugacyClassTable, SubgroupRef, as_group, cyclic_group,
                      group_from_spec, subgroup_conjugacy_classes)
from ..induced import (fw_map, norm_partition, restriction_parks,
                       transfer_parks_inclusion, transfer_parks_trivial)
from ..verify import run_suite
from ..wreath_power import AAElement, parks_char, parts_for, power_op
from . import schemas

PACKAGE_NAME = "wreathmarks"
PACKAGE_VERSION = "0.1.0"


def _table(spec: str, cap_elements: int, cap_subgroups: int) -> ConjugacyClassTable:
    group = group_from_spec(spec, max_elements=cap_elements)
    return subgroup_conjugacy_classes(group, cap=cap_subgroups)


def _partition_model(table, la) -> schemas.PartitionModel:
    return schemas.PartitionModel.model_validate(serialize.partition_to_json(table, la))


def handle_health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", name=PACKAGE_NAME, version=PACKAGE_VERSION)


def handle_marks(req: schemas.MarksRequest) -> schemas.MarksResponse:
    table = _table(req.group, req.cap_elements, req.cap_subgroups)
    return schemas.MarksResponse(
        group=req.group,
        classes=list(table.class_names),
        orders=[c.order for c in table.classes],
        matrix=[list(row) for row in table_of_marks(table)],
    )


def handle_parts(req: schemas.PartsRequest) -> schemas.PartsResponse:
    table = _table(req.group, req.cap_elements, req.cap_subgroups)
    partitions = parts_for(table, req.n)
    return schemas.PartsResponse(
        group=req.group, n=req.n, count=len(partitions),
        partitions=[_partition_model(table, la) for la in partitions],
    )


def _element_from_model(model: schemas.BurnsideElementModel, group: str | None,
                        cap_elements: int, cap_subgroups: int) -> BurnsideElement:
    spec = model.group or group
    if not spec:
        raise GroupSpecError("no group given: set element.group or the request group")
    table = _table(spec, cap_elements, cap_subgroups)
    coords = [0] * table.size
    for entry in model.coords:
        coords[table.index_of_name(entry.class_name)] += entry.coeff
    return BurnsideElement(table, coords)


def _aa_from_model(model: schemas.AAElementModel, group: str | None,
                   cap_elements: int, cap_subgroups: int) -> AAElement:
    spec = model.group or group
    if not spec:
        raise GroupSpecError("no group given: set element.group or the request group")
    table = _table(spec, cap_elements, cap_subgroups)
    obj = {
        "group": spec, "n": model.n,
        "coords": [{"partition": e.partition.model_dump(by_alias=True), "coeff": e.coeff}
                   for e in model.coords],
    }
    return serialize.aa_from_json(obj, table)


def _aa_model(x: AAElement) -> schemas.AAElementModel:
    return schemas.AAElementModel.model_validate(serialize.aa_to_json(x))


def handle_power(req: schemas.PowerRequest) -> schemas.AAElementModel:
    x = _element_from_model(req.element, req.group, req.cap_elements, req.cap_subgroups)
    return _aa_model(power_op(x, req.n))


def handle_parks_char(req: schemas.ParksCharRequest) -> schemas.ParksVectorModel:
    x = _aa_from_model(req.element, req.group, req.cap_elements, req.cap_subgroups)
    return schemas.ParksVectorModel.model_validate(serialize.parks_to_json(parks_char(x)))


def handle_star(req: schemas.StarRequest) -> schemas.AAElementModel:
    x = _aa_from_model(req.x, req.group, req.cap_elements, req.cap_subgroups)
    y = _aa_from_model(req.y, req.group or req.x.group, req.cap_elements, req.cap_subgroups)
    return _aa_model(x.star(y))


def _resolve_subgroup(ambient_table: ConjugacyClassTable, spec: str,
                      cap_elements: int) -> SubgroupRef:
    """Interpret a spec as a subgroup of the ambient group: 'e' is the trivial
    subgroup; cycle notation is read on the ambient domain; other specs must
    produce a group on the same domain whose elements all lie in the ambient."""
    G = ambient_table.group
    if spec.strip() == "e":
        return SubgroupRef.trivial(G)
    text = spec.strip()
    if text and text[0] == "(":
        text = f"domain={G.degree} {text}"
    sub_group = group_from_spec(text, max_elements=cap_elements)
    if sub_group.degree != G.degree or not sub_group.element_set <= G.element_set:
        raise GroupSpecError(f"{spec!r} is not a subgroup of {ambient_table.group.spec!r} "
                             f"on the same domain")
    return SubgroupRef(G, sub_group.element_set)


def handle_induced_map(req: schemas.InducedMapRequest):
    cap_e, cap_s = req.cap_elements, req.cap_subgroups
    if req.kind == "fw":
        to_table = _table(req.to_spec, cap_e, cap_s)
        cm = cyclic_group(to_table.group.order, max_elements=cap_e)
        c_table = subgroup_conjugacy_classes(cm, cap=cap_s)
        matrix = fw_map(to_table, c_table).parks_matrix(req.n)
        from_name = req.from_spec or cm.spec
        return _matrix_response("fw", from_name, req.to_spec, matrix)

    if req.kind == "norm":
        if not req.from_spec:
            raise GroupSpecError("norm needs --from (the subgroup)")
        to_table = _table(req.to_spec, cap_e, cap_s)
        H = _resolve_subgroup(to_table, req.from_spec, cap_e)
        h_table = subgroup_conjugacy_classes(as_group(H), cap=cap_s)
        index = to_table.group.order // H.order
        if req.n not in (1, index):
            raise GroupSpecError(f"norm degree must be [G:H] = {index}")
        entries = []
        for idx, K in enumerate(to_table.classes):
            la = norm_partition(to_table, H, h_table, K)
            entries.append(schemas.NormEntryModel.model_validate(
                {"class": to_table.class_names[idx],
                 "partition": serialize.partition_to_json(h_table, la)}))
        return schemas.NormMapResponse(from_group=req.from_spec, to_group=req.to_spec,
                                       n=index, entries=entries)

    if not req.from_spec:
        raise GroupSpecError(f"{req.kind} needs --from")

    if req.kind == "transfer":
        to_is_trivial = req.to_spec.strip() == "e"
        from_table = _table(req.from_spec, cap_e, cap_s)
        if to_is_trivial:
            e_table = _table("e", cap_e, cap_s)
            matrix = transfer_parks_trivial(from_table, e_table, req.n)
        else:
            to_table = _table(req.to_spec, cap_e, cap_s)
            H = _resolve_subgroup(to_table, req.from_spec, cap_e)
            h_table = subgroup_conjugacy_classes(as_group(H), cap=cap_s)
            matrix = transfer_parks_inclusion(to_table, H, h_table, req.n)
        return _matrix_response("transfer", req.from_spec, req.to_spec, matrix)

    # restriction: A(from) -> A(to) along a hom to -> from
    from_table = _table(req.from_spec, cap_e, cap_s)
    if req.from_spec.strip() == "e":
        to_table = _table(req.to_spec, cap_e, cap_s)
        psi = [0] * to_table.size
        matrix = restriction_parks(from_table, to_table, psi, req.n)
    else:
        sub = _resolve_subgroup(from_table, req.to_spec, cap_e)
        to_table = subgroup_conjugacy_classes(as_group(sub), cap=cap_s)
        psi = [from_table.class_of_elements(rep.elems) for rep in to_table.classes]
        matrix = restriction_parks(from_table, to_table, psi, req.n)
    return _matrix_response("restriction", req.from_spec, req.to_spec, matrix)


def _matrix_response(kind: str, from_spec: str, to_spec: str, matrix):
    payload = serialize.parks_matrix_to_json(matrix, kind, from_spec, to_spec)
    return schemas.InducedMapResponse(
        kind=kind, from_group=from_spec, to_group=to_spec, n=matrix.n,
        entries=[schemas.MatrixEntryModel.model_validate(e) for e in payload["entries"]],
    )


def handle_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    report = run_suite(req.suite, req.group, req.n,
                       cap_elements=req.cap_elements, cap_subgroups=req.cap_subgroups,
                       oracle=req.oracle)
    return schemas.VerifyResponse.model_validate(report)


def create_app() -> FastAPI:
    app = FastAPI(title="wreathmarks", version=PACKAGE_VERSION,
                  description="Exact Burnside-ring computations for wreath products")

    @app.exception_handler(WreathmarksError)
    async def _domain_error(_request: Request, exc: WreathmarksError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return handle_health()

    @app.post("/marks", response_model=schemas.MarksResponse)
    def marks(req: schemas.MarksRequest):
        return handle_marks(req)

    @app.post("/parts", response_model=schemas.PartsResponse)
    def parts(req: schemas.PartsRequest):
        return handle_parts(req)

    @app.post("/power", response_model=schemas.AAElementModel)
    def power(req: schemas.PowerRequest):
        return handle_power(req)

    @app.post("/parks-char", response_model=schemas.ParksVectorModel)
    def parks_char_route(req: schemas.ParksCharRequest):
        return handle_parks_char(req)

    @app.post("/star", response_model=schemas.AAElementModel)
    def star(req: schemas.StarRequest):
        return handle_star(req)

    @app.post("/induced-map")
    def induced_map(req: schemas.InducedMapRequest):
        return handle_induced_map(req)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        return handle_verify(req)

    return app


app = create_app()
