"""Declarative multi-step pipelines over the generation engine.

A pipeline config is an INI document listing base families and generation
steps; each item's output is persisted under the run directory as a sorted
canonical graph6 file plus a human-readable ``.meta`` manifest, which makes
runs resumable at item granularity and byte-comparable across worker
counts.

Row summaries mirror the enumeration-table layout: one row per family with
its edge-maximal count, the plus-clique count of the family, and both
restricted to cone-vertex-free graphs.  Reporting convention: a
complete-graph base stands for itself in its row's plus-clique cell (the
literal descended artifact, which at order q-1 also contains the complete
graph minus one edge, is persisted and is what later steps extend).

Config format::

    [pipeline]
    name = example
    workers = 1

    [base:k6]
    family = 3; 8; 6; 3        # avec ; q ; n ; t
    kind = complete            # complete | exhaustive | extremal | file | empty
    # path = seeds.g6          # for kind = file

    [step:s1]
    family = 4; 8; 8; 3
    r = 2
    algorithm = 1              # 2 adds: input2 = <name of the q-1 family>
    input = k6

    [descend:d1]
    input = s1                 # counts the plus-clique set of s1's family
"""

from __future__ import annotations

import configparser
import time
from dataclasses import dataclass, field
from pathlib import Path

from .arrowing import ArrowVector, arrows
from .bounds import folkman_value_at_m
from .canon import GraphSet, file_digest, read_manifest, write_manifest
from .cliques import clique_number, cone_vertex_count, has_independent_set, is_plus_kt
from .generate import maximal_family_exhaustive
from .graphs import GraphError
from .search import (
    FamilySpec,
    complete_base,
    generate_family,
    generate_family_cone_split,
    plus_clique_descent,
)

EXHAUSTIVE_BASE_LIMIT = 10


class ConfigError(GraphError):
    pass


@dataclass(frozen=True)
class Family:
    avec: tuple[int, ...]
    q: int
    n: int
    t: int

    def key(self) -> str:
        return f"a{'-'.join(map(str, self.avec))}_q{self.q}_n{self.n}_t{self.t}"

    def display(self) -> str:
        return f"H({', '.join(map(str, self.avec))}; {self.q}; {self.n})"

    def normalized(self) -> "Family":
        if len(self.avec) == 1 and self.avec[0] <= self.q - 1 <= self.n:
            return Family((self.q - 1,), self.q, self.n, self.t)
        return self


def parse_family(text: str) -> Family:
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 4:
        raise ConfigError(f"family needs 'avec; q; n; t', got {text!r}")
    avec = ArrowVector.parse(parts[0]).canonical().entries
    if not avec:
        raise ConfigError(f"empty target vector in {text!r}")
    return Family(avec, int(parts[1]), int(parts[2]), int(parts[3]))


@dataclass
class BaseItem:
    name: str
    family: Family
    kind: str
    path: str | None = None


@dataclass
class StepItem:
    name: str
    family: Family
    r: int
    algorithm: int
    input: str
    input2: str | None = None


@dataclass
class DescendItem:
    name: str
    input: str


@dataclass
class PipelineConfig:
    name: str
    workers: int
    items: list
    config_dir: str = "."


@dataclass
class StepReport:
    name: str
    kind: str
    family: Family
    r: int | None = None
    algorithm: int | None = None
    count: int | None = None
    cone_free_count: int | None = None
    plusk_count: int | None = None
    plusk_cone_free_count: int | None = None
    plusk_literal_count: int | None = None
    plusk_vector: tuple | None = None
    seconds: float = 0.0
    resumed: bool = False
    input_digests: dict = field(default_factory=dict)
    output_path: str = ""

    # convenience accessors for the certificate checker
    @property
    def avec(self):
        return self.family.avec

    @property
    def q(self):
        return self.family.q

    @property
    def n(self):
        return self.family.n

    @property
    def t(self):
        return self.family.t


def parse_config(path) -> PipelineConfig:
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config {path}")
    name = "pipeline"
    workers = 1
    items = []
    for section in cp.sections():
        body = cp[section]
        if section == "pipeline":
            name = body.get("name", name)
            workers = body.getint("workers", workers)
            continue
        kind, _, item_name = section.partition(":")
        if not item_name:
            raise ConfigError(f"section [{section}] needs a name after ':'")
        if kind == "base":
            items.append(
                BaseItem(
                    name=item_name,
                    family=parse_family(body["family"]),
                    kind=body.get("kind", "complete"),
                    path=body.get("path"),
                )
            )
        elif kind == "step":
            items.append(
                StepItem(
                    name=item_name,
                    family=parse_family(body["family"]),
                    r=body.getint("r"),
                    algorithm=body.getint("algorithm", 1),
                    input=body["input"],
                    input2=body.get("input2"),
                )
            )
        elif kind == "descend":
            items.append(DescendItem(name=item_name, input=body["input"]))
        else:
            raise ConfigError(f"unknown section kind [{section}]")
    cfg = PipelineConfig(
        name=name, workers=workers, items=items, config_dir=str(Path(path).parent)
    )
    validate_config(cfg)
    return cfg


def validate_config(cfg: PipelineConfig) -> None:
    """Reject inconsistent chains before any computation starts."""
    problems = []
    families = {}
    for item in cfg.items:
        if item.name in families:
            problems.append(f"duplicate item name {item.name!r}")
        if isinstance(item, BaseItem):
            fam = item.family
            if item.kind not in ("complete", "exhaustive", "extremal", "file", "empty"):
                problems.append(f"{item.name}: unknown base kind {item.kind!r}")
            if item.kind == "complete":
                if len(fam.avec) != 1 or not fam.avec[0] <= fam.n <= fam.q - 1:
                    problems.append(
                        f"{item.name}: complete base needs a single-entry vector "
                        f"with a1 <= n <= q-1, got {fam.display()}"
                    )
            if item.kind == "exhaustive" and fam.n > EXHAUSTIVE_BASE_LIMIT:
                problems.append(
                    f"{item.name}: exhaustive base capped at "
                    f"{EXHAUSTIVE_BASE_LIMIT} vertices, got n={fam.n}"
                )
            if item.kind == "extremal":
                vec = ArrowVector(fam.avec)
                if fam.q != vec.m or fam.n != vec.m + vec.p:
                    problems.append(
                        f"{item.name}: extremal base needs q = m and n = m + p"
                    )
            if item.kind == "file" and not item.path:
                problems.append(f"{item.name}: file base needs a path")
            families[item.name] = fam
        elif isinstance(item, StepItem):
            fam = item.family
            if item.algorithm not in (1, 2):
                problems.append(f"{item.name}: algorithm must be 1 or 2")
            try:
                spec = FamilySpec(ArrowVector(fam.avec), fam.q, fam.n, item.r, fam.t)
            except GraphError as exc:
                problems.append(f"{item.name}: {exc}")
                families[item.name] = fam
                continue
            dec = spec.decremented().entries
            want = Family(dec, fam.q, fam.n - item.r, fam.t).normalized()
            got = families.get(item.input)
            if got is None:
                problems.append(f"{item.name}: input {item.input!r} not defined earlier")
            elif got.normalized() != want:
                problems.append(
                    f"{item.name}: input family {got.display()} (t={got.t}) does not "
                    f"chain to {fam.display()} with r={item.r}; expected "
                    f"{want.display()} (t={want.t})"
                )
            if item.algorithm == 1 and item.input2 is not None:
                problems.append(f"{item.name}: input2 is only used by algorithm 2")
            if item.algorithm == 2:
                want2 = Family(dec, fam.q - 1, fam.n - 1, fam.t).normalized()
                got2 = families.get(item.input2) if item.input2 else None
                if item.input2 is None:
                    problems.append(f"{item.name}: algorithm 2 needs input2")
                elif got2 is None:
                    problems.append(
                        f"{item.name}: input2 {item.input2!r} not defined earlier"
                    )
                elif got2.normalized() != want2:
                    problems.append(
                        f"{item.name}: input2 family {got2.display()} (t={got2.t}) "
                        f"does not match the q-1 family {want2.display()}"
                    )
            families[item.name] = fam
        elif isinstance(item, DescendItem):
            if item.input not in families:
                problems.append(f"{item.name}: input {item.input!r} not defined earlier")
            else:
                families[item.name] = families[item.input]
    if problems:
        raise ConfigError("invalid pipeline config:\n  " + "\n  ".join(problems))


# -- artifacts ----------------------------------------------------------------


def _family_meta(fam: Family) -> dict:
    return {
        "family": f"{','.join(map(str, fam.avec))}; {fam.q}; {fam.n}; {fam.t}",
    }


def _counts(graphs: GraphSet) -> tuple[int, int]:
    total = len(graphs)
    cone_free = sum(1 for g in graphs if cone_vertex_count(g) == 0)
    return total, cone_free


class Runner:
    def __init__(self, cfg: PipelineConfig, out_dir, workers=None, fresh=False):
        self.cfg = cfg
        self.dir = Path(out_dir)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.workers = workers if workers is not None else cfg.workers
        self.fresh = fresh
        self.reports: list[StepReport] = []
        self._families: dict[str, Family] = {}

    # paths
    def maximal_path(self, fam: Family) -> Path:
        return self.dir / f"maximal_{fam.key()}.g6"

    def plusk_path(self, fam: Family, vector) -> Path:
        suffix = ""
        if tuple(vector) != fam.avec:
            suffix = f"_v{'-'.join(map(str, vector))}"
        return self.dir / f"plusk_{fam.key()}{suffix}.g6"

    def run(self) -> list[StepReport]:
        for item in self.cfg.items:
            if isinstance(item, BaseItem):
                self._run_base(item)
            elif isinstance(item, StepItem):
                self._run_step(item)
            else:
                self._run_descend(item)
        self._write_reports()
        return self.reports

    # -- item handlers ---------------------------------------------------------

    def _run_base(self, item: BaseItem):
        fam = item.family
        self._families[item.name] = fam
        path = self.maximal_path(fam)
        meta_path = path.with_suffix(".meta")
        started = time.perf_counter()
        if not self.fresh and path.exists() and meta_path.exists():
            meta = read_manifest(meta_path)
            if meta.get("kind") == f"base:{item.kind}":
                self.reports.append(
                    StepReport(
                        name=item.name,
                        kind="base",
                        family=fam,
                        count=int(meta["count"]),
                        cone_free_count=int(meta["cone_free_count"]),
                        seconds=0.0,
                        resumed=True,
                        output_path=str(path),
                    )
                )
                return
        graphs = self._build_base(item)
        graphs.save(path)
        count, cone_free = _counts(graphs)
        seconds = time.perf_counter() - started
        write_manifest(
            meta_path,
            {
                **_family_meta(fam),
                "kind": f"base:{item.kind}",
                "produced_by": item.name,
                "count": count,
                "cone_free_count": cone_free,
                "seconds": f"{seconds:.3f}",
            },
        )
        self.reports.append(
            StepReport(
                name=item.name,
                kind="base",
                family=fam,
                count=count,
                cone_free_count=cone_free,
                seconds=seconds,
                output_path=str(path),
            )
        )

    def _build_base(self, item: BaseItem) -> GraphSet:
        fam = item.family
        if item.kind == "complete":
            return complete_base(fam.avec, fam.q, fam.n, fam.t)
        if item.kind == "empty":
            return GraphSet()
        if item.kind == "exhaustive":
            return maximal_family_exhaustive(fam.avec, fam.q, fam.n, fam.t)
        if item.kind == "extremal":
            _, extremal = folkman_value_at_m(fam.avec)
            out = GraphSet()
            out.insert(extremal)
            return out
        # file: resolved against the run directory, then the config directory,
        # then as given
        path = Path(item.path)
        if not path.is_absolute():
            for root in (self.dir, Path(self.cfg.config_dir)):
                if (root / item.path).exists():
                    path = root / item.path
                    break
        if not path.exists():
            raise ConfigError(f"base {item.name}: file {item.path} not found")
        graphs = GraphSet.load(path)
        for g in graphs:
            if (
                clique_number(g) >= fam.q
                or has_independent_set(g, fam.t + 1)
                or not is_plus_kt(g, fam.q)
                or not arrows(g, fam.avec)
            ):
                raise ConfigError(
                    f"base {item.name}: file member is not an edge-maximal graph "
                    f"of {fam.display()} with independence <= {fam.t}"
                )
        return graphs

    def _ensure_plusk(self, fam: Family, report: StepReport, vector=None, need_graphs=True):
        """Compute (or reload) the descended plus-clique artifact of a family
        and record its counts on the given report.  ``vector`` defaults to
        the family's own vector; a consuming step passes its literal
        decremented vector, which may be weaker than the declared one when
        the chain leans on single-entry family normalization.  With
        ``need_graphs=False`` a reusable artifact only has its counts read."""
        vector = tuple(vector) if vector is not None else fam.avec
        report.plusk_vector = vector
        src = self.maximal_path(fam)
        path = self.plusk_path(fam, vector)
        meta_path = path.with_suffix(".meta")
        digest = file_digest(src)
        if not self.fresh and path.exists() and meta_path.exists():
            meta = read_manifest(meta_path)
            if meta.get("source_digest") == digest:
                report.plusk_literal_count = int(meta["count"])
                report.plusk_cone_free_count = int(meta["cone_free_count"])
                if not need_graphs:
                    return None
                return GraphSet.load_trusted(path)
        seeds = GraphSet.load_trusted(src)
        graphs = plus_clique_descent(
            seeds, vector, fam.q, fam.t, workers=self.workers
        )
        graphs.save(path)
        count, cone_free = _counts(graphs)
        write_manifest(
            meta_path,
            {
                **_family_meta(fam),
                "kind": "plus-clique",
                "vector": ",".join(map(str, vector)),
                "count": count,
                "cone_free_count": cone_free,
                "source_digest": digest,
            },
        )
        report.plusk_literal_count = count
        report.plusk_cone_free_count = cone_free
        return graphs

    def _run_step(self, item: StepItem):
        fam = item.family
        self._families[item.name] = fam
        in_fam = self._families[item.input]
        in2_fam = self._families[item.input2] if item.input2 else None
        path = self.maximal_path(fam)
        meta_path = path.with_suffix(".meta")
        digests = {item.input: file_digest(self.maximal_path(in_fam))}
        if in2_fam is not None:
            digests[item.input2] = file_digest(self.maximal_path(in2_fam))
        report = StepReport(
            name=item.name,
            kind="step",
            family=fam,
            r=item.r,
            algorithm=item.algorithm,
            input_digests=digests,
            output_path=str(path),
        )
        started = time.perf_counter()
        spec = FamilySpec(ArrowVector(fam.avec), fam.q, fam.n, item.r, fam.t)
        resumable = False
        if not self.fresh and path.exists() and meta_path.exists():
            meta = read_manifest(meta_path)
            resumable = (
                meta.get("inputs") == self._digest_line(digests)
                and meta.get("algorithm") == str(item.algorithm)
                and meta.get("r") == str(item.r)
            )
        aprime = self._ensure_plusk(
            in_fam, report, vector=spec.decremented().entries, need_graphs=not resumable
        )
        if resumable and aprime is None:
            report.count = int(meta["count"])
            report.cone_free_count = int(meta["cone_free_count"])
            report.resumed = True
            report.seconds = time.perf_counter() - started
            self.reports.append(report)
            return
        seeds = GraphSet.load_trusted(self.maximal_path(in_fam))
        if item.algorithm == 1:
            result = generate_family(spec, seeds, workers=self.workers, descended=aprime)
        else:
            cone_seeds = GraphSet.load_trusted(self.maximal_path(in2_fam))
            result = generate_family_cone_split(
                spec, seeds, cone_seeds, workers=self.workers, descended=aprime
            )
        result.output.save(path)
        count, cone_free = _counts(result.output)
        report.count = count
        report.cone_free_count = cone_free
        report.seconds = time.perf_counter() - started
        write_manifest(
            meta_path,
            {
                **_family_meta(fam),
                "kind": "step",
                "produced_by": item.name,
                "algorithm": item.algorithm,
                "r": item.r,
                "count": count,
                "cone_free_count": cone_free,
                "inputs": self._digest_line(digests),
                "seconds": f"{report.seconds:.3f}",
            },
        )
        self.reports.append(report)

    def _run_descend(self, item: DescendItem):
        fam = self._families[item.input]
        self._families[item.name] = fam
        report = StepReport(name=item.name, kind="descend", family=fam)
        started = time.perf_counter()
        self._ensure_plusk(fam, report, need_graphs=False)
        report.seconds = time.perf_counter() - started
        report.output_path = str(self.plusk_path(fam, fam.avec))
        self.reports.append(report)

    @staticmethod
    def _digest_line(digests: dict) -> str:
        return ",".join(f"{k}:{v}" for k, v in sorted(digests.items()))

    # -- reporting ---------------------------------------------------------------

    def _write_reports(self):
        rows = assemble_rows(self.cfg, self.reports)
        with open(self.dir / "report.txt", "w", encoding="utf-8") as fh:
            fh.write(format_rows(rows))
        with open(self.dir / "report.kv", "w", encoding="utf-8") as fh:
            for rep in self.reports:
                fields = [
                    f"item = {rep.name}",
                    f"kind = {rep.kind}",
                    f"avec = {','.join(map(str, rep.family.avec))}",
                    f"q = {rep.family.q}",
                    f"n = {rep.family.n}",
                    f"t = {rep.family.t}",
                ]
                if rep.r is not None:
                    fields.append(f"r = {rep.r}")
                if rep.algorithm is not None:
                    fields.append(f"algorithm = {rep.algorithm}")
                if rep.count is not None:
                    fields.append(f"maximal = {rep.count}")
                    fields.append(f"maximal_cone_free = {rep.cone_free_count}")
                if rep.plusk_literal_count is not None:
                    fields.append(f"plus_clique = {rep.plusk_literal_count}")
                    fields.append(f"plus_clique_cone_free = {rep.plusk_cone_free_count}")
                fields.append(f"seconds = {rep.seconds:.3f}")
                fields.append(f"resumed = {rep.resumed}")
                for key, value in sorted(rep.input_digests.items()):
                    fields.append(f"input_digest:{key} = {value}")
                fh.write("\n".join(fields) + "\n\n")


@dataclass
class FamilyRow:
    family: Family
    alpha: str
    maximal: int | None = None
    maximal_cone_free: int | None = None
    plusk: int | None = None
    plusk_cone_free: int | None = None
    seconds: float = 0.0


def assemble_rows(cfg: PipelineConfig, reports) -> list[FamilyRow]:
    """Merge per-item reports into one table row per family, appendix style:
    a family's maximal counts come from the item that produced it and its
    plus-clique counts from whichever item descended it."""
    complete_bases = {
        item.family.key()
        for item in cfg.items
        if isinstance(item, BaseItem) and item.kind == "complete"
    }
    step_r = {}
    for item in cfg.items:
        if isinstance(item, StepItem):
            step_r[item.family.key()] = item.r
    rows: dict[str, FamilyRow] = {}
    order = []
    by_name = {rep.name: rep for rep in reports}
    for rep in reports:
        key = rep.family.key()
        if key not in rows:
            r = step_r.get(key)
            # r = 2 outputs are the whole <= t family; deeper windows are slices
            alpha = f"= {rep.family.t}" if r == rep.family.t and r > 2 else f"<= {rep.family.t}"
            rows[key] = FamilyRow(family=rep.family, alpha=alpha)
            order.append(key)
        row = rows[key]
        row.seconds += rep.seconds
        if rep.kind in ("base", "step") and rep.count is not None:
            row.maximal = rep.count
            row.maximal_cone_free = rep.cone_free_count
        if rep.plusk_literal_count is not None and rep.kind in ("base", "descend"):
            row.plusk = rep.plusk_literal_count
            row.plusk_cone_free = rep.plusk_cone_free_count
    # a step's descent counts belong to its input family's row, but only
    # when the step's decremented vector is the family's own vector
    for item in cfg.items:
        if not isinstance(item, StepItem):
            continue
        rep = by_name.get(item.name)
        if rep is None or rep.plusk_literal_count is None:
            continue
        in_rep = by_name.get(item.input)
        if in_rep is None or rep.plusk_vector != in_rep.family.avec:
            continue
        row = rows.get(in_rep.family.key())
        if row is not None and row.plusk is None:
            row.plusk = rep.plusk_literal_count
            row.plusk_cone_free = rep.plusk_cone_free_count
    # a complete base stands for itself in its plus-clique cell
    for key in complete_bases:
        row = rows.get(key)
        if row is not None and row.plusk is not None:
            row.plusk = 1
            row.plusk_cone_free = 0
    return [rows[key] for key in order]


def format_rows(rows) -> str:
    header = (
        f"{'set':<28}{'alpha':<8}{'maximal':>9}{'no cone':>9}"
        f"{'plus-K':>12}{'no cone':>9}{'seconds':>10}"
    )
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.family.display():<28}{row.alpha:<8}"
            f"{_cell(row.maximal):>9}{_cell(row.maximal_cone_free):>9}"
            f"{_cell(row.plusk):>12}{_cell(row.plusk_cone_free):>9}"
            f"{row.seconds:>10.2f}"
        )
    return "\n".join(lines) + "\n"


def _cell(value) -> str:
    return "-" if value is None else str(value)


def run_pipeline(config_path, out_dir, workers=None, fresh=False):
    cfg = parse_config(config_path)
    runner = Runner(cfg, out_dir, workers=workers, fresh=fresh)
    reports = runner.run()
    return reports, assemble_rows(cfg, reports)
