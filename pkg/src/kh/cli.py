"""Command line client.

Every subcommand talks to the HTTP service: by default through an
in-process ASGI transport, or to a remote server via --url.  Exit codes:
0 success, 1 a verification the command ran reported a failure, 2 bad
input (unparseable diagram, missing file, malformed request).
"""

import asyncio
import json
import sys

import click
import httpx

from .checks import checks_text
from .homology import _latex_poly, latex_report

_BASE = "http://kh.internal"


def _canonical(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _call(url, path, payload):
    if url:
        with httpx.Client(base_url=url, timeout=600.0) as client:
            r = client.post(path, json=payload)
            return r.status_code, r.json()

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url=_BASE, timeout=600.0
        ) as client:
            r = await client.post(path, json=payload)
            return r.status_code, r.json()

    return asyncio.run(go())


def _fetch(url, path, payload):
    try:
        status, body = _call(url, path, payload)
    except (httpx.HTTPError, ValueError) as e:
        click.echo("cannot reach service: %s" % e, err=True)
        sys.exit(2)
    if status >= 500:
        click.echo("verification failure: %s" % body, err=True)
        sys.exit(1)
    if status != 200:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        click.echo("input error: %s" % detail, err=True)
        sys.exit(2)
    return body


def _diagram_text(diagram, file):
    if (diagram is None) == (file is None):
        raise click.UsageError("provide exactly one of -d/--diagram or -f/--file")
    if diagram is not None:
        return diagram
    try:
        with open(file, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        click.echo("cannot read %s: %s" % (file, e), err=True)
        sys.exit(2)


def _group_str(free, torsion):
    parts = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append("Z^%d" % free)
    parts.extend("Z/%d" % m for m in torsion)
    return " + ".join(parts) if parts else "0"


_LATEX_SPECIALS = {
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
}


def _latex_escape(text):
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def _format_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "latex", "text"]),
        default="text",
        show_default=True,
        help="output rendering",
    )(fn)


def _url_option(fn):
    return click.option(
        "--url",
        default=None,
        help="base URL of a running service; default runs in process",
    )(fn)


@click.group()
def main():
    """Khovanov homology, bracket polynomials, and simplicial checks."""


@main.command()
@click.option("-d", "--diagram", default=None, help="planar diagram text")
@click.option("-f", "--file", "file", type=click.Path(), default=None, help="file holding the diagram")
@_format_option
@_url_option
def jones(diagram, file, fmt, url):
    """Bracket and Jones polynomials of a diagram."""
    body = _fetch(url, "/jones", {"diagram": _diagram_text(diagram, file)})
    if fmt == "json":
        click.echo(_canonical(body), nl=False)
    elif fmt == "latex":
        lines = [
            "% schema " + body["schema"],
            r"\langle D \rangle_A = %s" % _latex_poly(body["bracket_A"]),
            r"\langle D \rangle_q = %s" % _latex_poly(body["bracket_q"]),
            r"J = %s" % _latex_poly(body["jones_J"]),
            r"V = %s" % _latex_poly(body["jones_V"]),
            r"w = %d" % body["writhe"],
        ]
        click.echo("\n".join(lines))
    else:
        click.echo("J = %s" % body["jones_J"])
        click.echo("V = %s" % body["jones_V"])
        click.echo("bracket_A = %s" % body["bracket_A"])
        click.echo("bracket_q = %s" % body["bracket_q"])
        click.echo("writhe = %d" % body["writhe"])


@main.command()
@click.option("-d", "--diagram", default=None, help="planar diagram text")
@click.option("-f", "--file", "file", type=click.Path(), default=None, help="file holding the diagram")
@click.option(
    "--route",
    type=click.Choice(["direct", "nerve"]),
    default="direct",
    show_default=True,
    help="direct cube complex, or the functor complex on the simplex category",
)
@_format_option
@_url_option
def homology(diagram, file, route, fmt, url):
    """Integral link homology of a diagram."""
    body = _fetch(
        url, "/homology", {"diagram": _diagram_text(diagram, file), "route": route}
    )
    if fmt == "json":
        click.echo(_canonical(body), nl=False)
    elif fmt == "latex":
        click.echo(latex_report(body))
    else:
        click.echo("diagram: %s  (route %s)" % (body["diagram"], body["route"]))
        click.echo("n+ = %d, n- = %d" % (body["n_plus"], body["n_minus"]))
        for g in body["groups"]:
            click.echo(
                "  i=%-3d j=%-4d %s" % (g["i"], g["j"], _group_str(g["free_rank"], g["torsion"]))
            )
        click.echo("P(t, q) = %s" % body["poincare"])
        click.echo("J = %s" % body["jones_J"])


@main.command()
@click.option("-n", "--n", "n", type=int, default=2, show_default=True, help="simplex dimension")
@click.option("--truncation", type=int, default=None, help="nerve truncation level [default: n+1]")
@_format_option
@_url_option
def nerve(n, truncation, fmt, url):
    """Nerve of the face category of a simplex, and the subdivision check."""
    body = _fetch(url, "/nerve", {"n": n, "truncation": truncation})
    theorem = body["theorem"]
    if fmt == "json":
        click.echo(_canonical(body), nl=False)
    elif fmt == "latex":
        lines = [
            "% schema " + body["schema"],
            r"\begin{array}{rlll}",
            r"k & H_k(\mathrm{Cat}) & H_k(\mathrm{Subdiv}) & H_k(\nabla) \\",
            r"\hline",
        ]
        for k in range(body["n"] + 1):
            row = [
                _group_str(part[k]["free_rank"], part[k]["torsion"])
                for part in (theorem["category"], theorem["subdivision"], theorem["simplex"])
            ]
            lines.append(r"%d & %s \\" % (k, " & ".join(row)))
        lines.append(r"\end{array}")
        click.echo("\n".join(lines))
    else:
        click.echo("nerve of the face category of the %d-simplex" % body["n"])
        click.echo(
            "nondegenerate cells through level %d: %s"
            % (body["truncation"], body["nondegenerate"])
        )
        click.echo("subdivision cells by dimension: %s" % body["subdivision_cells"])
        click.echo(
            "three-way homology comparison: %s"
            % ("agree" if theorem["agree"] else "MISMATCH")
        )
        for k in range(body["n"] + 1):
            click.echo(
                "  degree %d: category %s  subdivision %s  simplex %s"
                % (
                    k,
                    _group_str(
                        theorem["category"][k]["free_rank"],
                        theorem["category"][k]["torsion"],
                    ),
                    _group_str(
                        theorem["subdivision"][k]["free_rank"],
                        theorem["subdivision"][k]["torsion"],
                    ),
                    _group_str(
                        theorem["simplex"][k]["free_rank"],
                        theorem["simplex"][k]["torsion"],
                    ),
                )
            )
        for m in theorem["mismatches"]:
            click.echo("  " + m)
    if not theorem["agree"]:
        sys.exit(1)


_DOLDKAN_DEFAULT = {"ranks": [1, 1], "boundaries": {"1": [[2]]}}


@main.command()
@click.option(
    "-d",
    "--diagram",
    "data",
    default=None,
    help='chain complex as JSON, e.g. \'{"ranks": [1, 1], "boundaries": {"1": [[2]]}}\'',
)
@click.option("-f", "--file", "file", type=click.Path(), default=None, help="file holding the JSON")
@click.option("--truncation", type=int, default=3, show_default=True, help="levels to build")
@click.option(
    "--normalized/--unnormalized",
    default=True,
    show_default=True,
    help="which simplex complex models the mapping space",
)
@_format_option
@_url_option
def doldkan(data, file, truncation, normalized, fmt, url):
    """Build the simplicial module of a chain complex and verify the roundtrip."""
    if data is not None and file is not None:
        raise click.UsageError("provide at most one of -d/--diagram or -f/--file")
    if file is not None:
        try:
            with open(file, "r", encoding="utf-8") as fh:
                data = fh.read()
        except OSError as e:
            click.echo("cannot read %s: %s" % (file, e), err=True)
            sys.exit(2)
    if data is None:
        spec = dict(_DOLDKAN_DEFAULT)
    else:
        try:
            spec = json.loads(data)
        except ValueError as e:
            click.echo("input error: bad JSON: %s" % e, err=True)
            sys.exit(2)
    if not isinstance(spec, dict) or "ranks" not in spec:
        click.echo('input error: need a JSON object with a "ranks" list', err=True)
        sys.exit(2)
    body = _fetch(
        url,
        "/doldkan",
        {
            "ranks": spec["ranks"],
            "boundaries": spec.get("boundaries", {}),
            "truncation": truncation,
            "normalized": normalized,
        },
    )
    ok = body["homology_agrees"] and (body["roundtrip"] is None or body["roundtrip"]["ok"])
    if fmt == "json":
        click.echo(_canonical(body), nl=False)
    elif fmt == "latex":
        groups = " & ".join(
            _group_str(g["free_rank"], g["torsion"]) for g in body["homology"]
        )
        lines = [
            "% schema " + body["schema"],
            r"C_* = (%s), \quad \Gamma(C)_n \colon (%s)"
            % (
                ", ".join(str(r) for r in body["ranks"]),
                ", ".join(str(d) for d in body["gamma_dims"]),
            ),
            r"\begin{array}{%s}" % ("l" * max(1, len(body["homology"]))),
            groups + r" \\",
            r"\end{array}",
            r"\text{roundtrip: %s}" % ("ok" if ok else "mismatch"),
        ]
        click.echo("\n".join(lines))
    else:
        click.echo("ranks: %s" % body["ranks"])
        click.echo(
            "module dims through level %d%s: %s"
            % (
                body["truncation"],
                "" if body["normalized"] else " (unnormalized)",
                body["gamma_dims"],
            )
        )
        click.echo(
            "homology: %s"
            % ", ".join(
                "H_%d = %s" % (k, _group_str(g["free_rank"], g["torsion"]))
                for k, g in enumerate(body["homology"])
            )
        )
        if body["roundtrip"] is not None:
            rt = body["roundtrip"]
            click.echo("roundtrip: %s" % ("ok" if rt["ok"] else "MISMATCH"))
            click.echo("  normalized complex ranks: %s" % rt["ranks"])
            click.echo("  source ranks (padded):    %s" % rt["source_ranks"])
            for m in rt["mismatches"]:
                click.echo("  " + m)
        else:
            click.echo(
                "homology agreement: %s" % ("ok" if body["homology_agrees"] else "MISMATCH")
            )
    if not ok:
        sys.exit(1)


@main.command()
@click.option("--fuzz", type=int, default=50, show_default=True, help="cases per generator")
@click.option("--seed", type=int, default=7, show_default=True, help="corpus seed")
@click.option("--parallel/--serial", default=False, show_default=True, help="run tasks in a thread pool")
@click.option("--only", default=None, help="run a single named task")
@click.option("-n", "--n", "n", type=int, default=None, help="restrict subdivision checks to one dimension")
@_format_option
@_url_option
def check(fuzz, seed, parallel, only, n, fmt, url):
    """Run the verification suite over seeded corpora."""
    body = _fetch(
        url,
        "/check",
        {"fuzz": fuzz, "seed": seed, "parallel": parallel, "only": only, "n": n},
    )
    if fmt == "json":
        click.echo(_canonical(body), nl=False)
    elif fmt == "latex":
        lines = [
            "% schema " + body["schema"],
            r"\begin{tabular}{llrl}",
            r"name & status & cases & detail \\",
            r"\hline",
        ]
        for r in body["checks"]:
            lines.append(
                r"%s & %s & %d & %s \\"
                % (
                    _latex_escape(r["name"]),
                    r["status"],
                    r["cases"],
                    _latex_escape(r["detail"]),
                )
            )
        lines.append(r"\end{tabular}")
        click.echo("\n".join(lines))
    else:
        click.echo(checks_text(body), nl=False)
    if not body["ok"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
