"""
src.cli.commands

================================================================================
Toolkit Commands
================================================================================

Overview
--------
Defines every subcommand of the toolkit CLI. Handlers parse arguments,
call exactly one service operation and print its report; they hold no
geometry or algebra of their own.

Subcommands
-----------
- ``validate``, ``distance``, ``interval``, ``angle``, ``link``, ``project``
- ``check scp | aov | lipschitz | checkpoints | contraction``
- ``tame grid | stabilizer | qcheck | link | dump``
- ``export dot | json``

Exit statuses: 0 when every check passes, 1 when violations were found,
2 on usage or input errors (see `src.cli.exception_handlers`).
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional

import click

from src.cli.exception_handlers import ToolkitGroup
from src.cli.responses import exit_status, render
from src.config.constants import EXIT_OK, EXIT_USAGE, OUTPUT_FORMATS
from src.config.env import get_app_config
from src.crud.complexes import complex_to_dot, dump_complex, link_to_dot, load_complex
from src.exceptions.custom_exceptions import InputError
from src.models.checkpoint import CheckpointSystem
from src.schemas.reports import (
    AngleReport,
    DistanceReport,
    IntervalReport,
    LinkReport,
    ProjectionReport,
)
from src.services import contraction_service, geometry_service, tame_complex_service, tame_group_service
from src.utils.logger_util import configure_logging, log_info

input_path = click.argument("path", type=click.Path(dir_okay=False))


def _ids(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise InputError("Expected a comma-separated list of vertex ids", details={"value": text}) from e


def _vertex_map(text: str) -> Dict[int, int]:
    try:
        pairs = [item.split(":") for item in text.split(",") if item.strip()]
        return {int(a): int(b) for a, b in pairs}
    except ValueError as e:
        raise InputError("Expected a map written as u:v,u:v,...", details={"value": text}) from e


def _threshold(text: str):
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        return int(text)
    except ValueError as e:
        raise InputError("Threshold must be an integer or 'inf'", details={"value": text}) from e


def _emit(ctx: click.Context, report) -> None:
    click.echo(render(report, ctx.obj["format"]), nl=False)
    ctx.exit(exit_status(report))


@click.group(cls=ToolkitGroup)
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
@click.pass_context
def cli(ctx: click.Context, output_format: str) -> None:
    """Exhaustive contraction checkers and tame-complex reproductions."""
    config = get_app_config()
    configure_logging(config["LOG_LEVEL"])
    log_info(
        f"{config['APP_NAME']} {config['APP_VERSION']} running {ctx.invoked_subcommand}",
        function_name="cli",
        context={"format": output_format},
    )
    ctx.obj = {"format": output_format, "config": config}


# ---------------------------------------------------------------------------
# Geometry queries
# ---------------------------------------------------------------------------


@cli.command()
@input_path
@click.pass_context
def validate(ctx: click.Context, path: str) -> None:
    """Report every structural problem of a complex."""
    _emit(ctx, geometry_service.validate(load_complex(path)))


@cli.command()
@input_path
@click.argument("source", type=int)
@click.argument("target", type=int)
@click.pass_context
def distance(ctx: click.Context, path: str, source: int, target: int) -> None:
    c = load_complex(path)
    _emit(ctx, DistanceReport(source=source, target=target, distance=geometry_service.distance(c, source, target)))


@cli.command()
@input_path
@click.argument("source", type=int)
@click.argument("target", type=int)
@click.pass_context
def interval(ctx: click.Context, path: str, source: int, target: int) -> None:
    """Vertices on geodesics between two vertices, with the geodesic count."""
    c = load_complex(path)
    dag = geometry_service.geodesic_dag(c, source, target)
    _emit(
        ctx,
        IntervalReport(
            source=source,
            target=target,
            distance=dag.distance,
            geodesic_count=dag.count_paths(),
            interval=sorted(dag.vertices),
        ),
    )


@cli.command()
@input_path
@click.argument("vertex", type=int)
@click.argument("first", type=int)
@click.argument("second", type=int)
@click.option("--corner", is_flag=True, help="FIRST and SECOND are neighbours; measure the edge angle.")
@click.option("--mode", type=click.Choice(["min", "max"]), default="min", show_default=True)
@click.pass_context
def angle(ctx: click.Context, path: str, vertex: int, first: int, second: int, corner: bool, mode: str) -> None:
    """Angle at VERTEX between two edges or two target vertices."""
    c = load_complex(path)
    if corner:
        value = geometry_service.corner_angle(c, vertex, (vertex, first), (vertex, second))
        report = AngleReport(kind="corner", vertex=vertex, first=[vertex, first], second=[vertex, second], angle=value)
    else:
        value = geometry_service.vertex_angle(c, vertex, first, second, mode=mode)
        report = AngleReport(kind="vertex", vertex=vertex, first=[first], second=[second], angle=value)
    _emit(ctx, report)


@cli.command()
@input_path
@click.option("--vertex", type=int, required=True)
@click.pass_context
def link(ctx: click.Context, path: str, vertex: int) -> None:
    """Link graph of a vertex (JSON, text or DOT)."""
    c = load_complex(path)
    c.require_vertex(vertex)
    graph = geometry_service.link_graph(c, vertex)
    if ctx.obj["format"] == "dot":
        click.echo(link_to_dot(c, graph), nl=False)
        return
    _emit(
        ctx,
        LinkReport(
            base=vertex,
            nodes=[list(e) for e in graph.nodes],
            arcs=sorted([list(a), list(b)] for a, b in graph.arcs),
        ),
    )


@cli.command()
@input_path
@click.option("--vertex", type=int, required=True)
@click.option("--line", "line_ids", required=True, help="Comma-separated vertex ids of the quasi-line.")
@click.pass_context
def project(ctx: click.Context, path: str, vertex: int, line_ids: str) -> None:
    """Closest-point projection of a vertex onto a vertex set."""
    c = load_complex(path)
    line = _ids(line_ids)
    projection = geometry_service.closest_point_projection(c, vertex, line)
    _emit(
        ctx,
        ProjectionReport(
            vertex=vertex,
            line=sorted(set(line)),
            distance=int(geometry_service.distance_to_set(c, vertex, line)),
            projection=sorted(projection),
        ),
    )


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------


@cli.group(cls=ToolkitGroup)
def check() -> None:
    """Exhaustive contraction checkers."""


@check.command()
@input_path
@click.option("--A", "angle_threshold", default="2", show_default=True, help="Angle threshold (integer or inf).")
@click.option("--R", "projection_threshold", type=int, default=0, show_default=True)
@click.option("--length-bound", type=int, default=None, help="Geodesic length bound (LENGTH_BOUND).")
@click.pass_context
def scp(ctx: click.Context, path: str, angle_threshold: str, projection_threshold: int, length_bound: Optional[int]) -> None:
    """Strong Concatenation Property with constants (A, R)."""
    bound = length_bound or ctx.obj["config"]["LENGTH_BOUND"]
    c = load_complex(path)
    _emit(ctx, contraction_service.check_scp(c, _threshold(angle_threshold), projection_threshold, bound))


@check.command()
@input_path
@click.option("--length-bound", type=int, default=None, help="Geodesic length bound (LENGTH_BOUND).")
@click.option("--measure-only", is_flag=True, help="Only measure the angle of view.")
@click.option("--mode", type=click.Choice(["min", "max"]), default="max", show_default=True)
@click.pass_context
def aov(ctx: click.Context, path: str, length_bound: Optional[int], measure_only: bool, mode: str) -> None:
    """Angle of view A, cross-checked against SCP with constants (3A, 0)."""
    c = load_complex(path)
    if measure_only:
        _emit(ctx, contraction_service.measure_angle_of_view(c, mode=mode))
    bound = length_bound or ctx.obj["config"]["LENGTH_BOUND"]
    _emit(ctx, contraction_service.cross_check_aov_scp(c, bound))


@check.command()
@input_path
@click.option("--line", "line_ids", required=True, help="Comma-separated vertex ids of the quasi-line.")
@click.option("--C", "constant", type=int, default=None, help="Contraction constant; measured when omitted.")
@click.pass_context
def lipschitz(ctx: click.Context, path: str, line_ids: str, constant: Optional[int]) -> None:
    """Coarse-Lipschitz inequality of the closest-point projection."""
    c = load_complex(path)
    line = _ids(line_ids)
    if constant is None:
        constant = contraction_service.contraction_constant(c, line, ctx.obj["config"]["RADIUS_BOUND"]).constant
    _emit(ctx, contraction_service.check_coarse_lipschitz(c, line, constant))


@check.command()
@input_path
@click.option("--line", "line_ids", required=True, help="Comma-separated vertex ids of the quasi-line.")
@click.option("--radius-bound", type=int, default=None, help="Largest ball radius (RADIUS_BOUND).")
@click.pass_context
def contraction(ctx: click.Context, path: str, line_ids: str, radius_bound: Optional[int]) -> None:
    """Strong-contraction constant of a quasi-line."""
    c = load_complex(path)
    bound = ctx.obj["config"]["RADIUS_BOUND"] if radius_bound is None else radius_bound
    _emit(ctx, contraction_service.contraction_constant(c, _ids(line_ids), bound))


@check.command()
@input_path
@click.option("--map", "h_text", required=True, help="Partial isometry h written as u:v,u:v,...")
@click.option("--seed", "seed_ids", required=True, help="Comma-separated vertex ids of the checkpoint S.")
@click.option("--L", "error_constant", type=int, default=0, show_default=True)
@click.pass_context
def checkpoints(ctx: click.Context, path: str, h_text: str, seed_ids: str, error_constant: int) -> None:
    """Checkpoint system of the translates h^i S."""
    c = load_complex(path)
    h = _vertex_map(h_text)
    system = CheckpointSystem.from_translates(h, _ids(seed_ids), len(c), len(c), error_constant)
    _emit(ctx, contraction_service.check_checkpoint_system(c, h, system))


# ---------------------------------------------------------------------------
# Tame complex
# ---------------------------------------------------------------------------


@cli.group(cls=ToolkitGroup)
def tame() -> None:
    """Computations in the tame group and its square complex."""


@tame.command()
@click.option("--wordlen", type=int, default=None, help="Word length (GRID_WORD_LENGTH).")
@click.option("--vertex-cap", type=int, default=None, help="Vertex budget (VERTEX_CAP).")
@click.pass_context
def grid(ctx: click.Context, wordlen: Optional[int], vertex_cap: Optional[int]) -> None:
    """Recover the 4x4 grid between [x1] and g²[x1]."""
    length = ctx.obj["config"]["GRID_WORD_LENGTH"] if wordlen is None else wordlen
    generators = tame_complex_service.grid_generators()
    portion = tame_complex_service.enumerate_ball(generators, length, vertex_cap)
    _emit(ctx, tame_complex_service.verify_grid(portion, generators=generators))


@tame.command()
@click.option("--set", "assignments", multiple=True, help="Check parameter values, e.g. --set a=2.")
@click.pass_context
def stabilizer(ctx: click.Context, assignments) -> None:
    """Constraints on the common stabiliser of the standard square and its g-translate."""
    if not assignments:
        _emit(ctx, tame_complex_service.common_stabilizer_report())
    values = {}
    for item in assignments:
        name, _, value = item.partition("=")
        try:
            values[name.strip()] = Fraction(value.strip())
        except ValueError as e:
            raise InputError("Parameter values are written name=rational", details={"value": item}) from e
    _emit(ctx, tame_group_service.check_parameters(values))


@tame.command()
@click.option("--count", type=int, default=20, show_default=True)
@click.option("--max-length", type=int, default=4, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def qcheck(ctx: click.Context, count: int, max_length: int, seed: int) -> None:
    """q-invariance and inverse identities of g and random words."""
    _emit(ctx, tame_group_service.q_check(count, max_length, seed))


@tame.command(name="link")
@click.option("--max-degree", type=int, default=None, help="Highest degree explored (LINK_MAX_DEGREE).")
@click.pass_context
def tame_link(ctx: click.Context, max_degree: Optional[int]) -> None:
    """Link distances at [x1] moved by elementary maps with P = x1^k."""
    degree = ctx.obj["config"]["LINK_MAX_DEGREE"] if max_degree is None else max_degree
    _emit(ctx, tame_complex_service.elementary_link_exploration(degree))


@tame.command()
@click.option("--wordlen", type=int, default=None, help="Word length (GRID_WORD_LENGTH).")
@click.option("--vertex-cap", type=int, default=None, help="Vertex budget (VERTEX_CAP).")
@click.pass_context
def dump(ctx: click.Context, wordlen: Optional[int], vertex_cap: Optional[int]) -> None:
    """JSON dump of the portion enumerated from the grid generators."""
    length = ctx.obj["config"]["GRID_WORD_LENGTH"] if wordlen is None else wordlen
    portion = tame_complex_service.enumerate_ball(tame_complex_service.grid_generators(), length, vertex_cap)
    _emit(ctx, tame_complex_service.portion_to_document(portion))


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


@cli.group(cls=ToolkitGroup)
def export() -> None:
    """Re-export a complex."""


@export.command()
@input_path
@click.option("--vertex", type=int, default=None, help="Export the link of this vertex instead.")
def dot(path: str, vertex: Optional[int]) -> None:
    c = load_complex(path)
    if vertex is None:
        click.echo(complex_to_dot(c), nl=False)
    else:
        c.require_vertex(vertex)
        click.echo(link_to_dot(c, geometry_service.link_graph(c, vertex)), nl=False)


@export.command(name="json")
@input_path
def export_json(path: str) -> None:
    click.echo(dump_complex(load_complex(path)), nl=False)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit status.

    :param argv: Arguments without the program name; ``sys.argv[1:]`` by default.
    :type argv: Optional[List[str]]
    :return: 0, 1 or 2.
    :rtype: int
    """
    try:
        result = cli.main(args=argv, prog_name="uber-contraction", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
