"""
Subcommand handlers.

Each handler takes the parsed arguments, the merged configuration and the
output formatter, and returns a RunReport; rendering and exit codes are left
to main.
"""

import time
from typing import Any

import numpy as np

from exactmix.cli.models import ParsedArguments
from exactmix.files.handler import ModelFileHandler
from exactmix.files.models import ModelFile
from exactmix.files.observations import parse_observations, read_observation_file
from exactmix.inference.decomposition import describe_decomposition, tree_decompose, validate_decomposition
from exactmix.inference.dense import pochhammer
from exactmix.inference.graph import interaction_graph
from exactmix.methods.factory import MethodFactory
from exactmix.model.generators import random_instance
from exactmix.model.transforms import scaled_alpha
from exactmix.model.types import Model, ObservationSeq
from exactmix.oracles import (
    brute_force_ptilde,
    factor_product_ptilde,
    partition_ptilde,
    permanent,
)
from exactmix.output.formatter import OutputFormatter
from exactmix.output.report import RunReport
from exactmix.output.spinner import ProgressSpinner
from exactmix.utils.errors import DomainError, MethodDomainError, ModelFormatError, UnsupportedMethodError
from exactmix.utils.logger import logger


def load_instance(
    parsed: ParsedArguments,
    config: dict[str, Any],
    algebraic: bool = False,
) -> tuple[ModelFile, Model, ObservationSeq]:
    """Read the model document and observations named on the command line.

    Raises:
        ModelFormatError: the document does not describe a valid model
        ObservationError: the observations cannot be parsed or fall outside the vocabulary
    """
    model_file = ModelFileHandler(config.get('max_file_size_mb', 10)).read_model(parsed.model_path)
    try:
        model = model_file.to_model(algebraic=algebraic)
        if parsed.alpha_scale is not None:
            model = scaled_alpha(model, parsed.alpha_scale)
    except DomainError as e:
        raise ModelFormatError(f"{model_file.file_path}: {e}") from e

    if parsed.obs_file:
        obs = read_observation_file(parsed.obs_file, model_file.vocab)
    else:
        obs = parse_observations(parsed.obs or "", model_file.vocab)
    obs.check(model)
    logger.info(f"Loaded {model_file.file_path}: m={model.m}, |V|={model.vocab_size}, n={obs.n}")
    return model_file, model, obs


def _inputs(parsed: ParsedArguments, model_file: ModelFile, model: Model, obs: ObservationSeq) -> dict[str, Any]:
    inputs = {
        "model": model_file.file_path,
        "tokens": list(obs.tokens),
        "n": obs.n,
        "m": model.m,
    }
    if parsed.alpha_scale is not None:
        inputs["alpha_scale"] = parsed.alpha_scale
    if parsed.overrides:
        inputs["overrides"] = dict(parsed.overrides)
    return inputs


def infer_command(parsed: ParsedArguments, config: dict[str, Any], formatter: OutputFormatter) -> RunReport:
    model_file, model, obs = load_instance(parsed, config)
    method = MethodFactory.create_method(parsed.method, config)
    if method.name == "sparse":
        formatter.warn_if_approximate(config.get("eps", 0.0))

    logger.info(f"infer: method={method.name} n={obs.n} m={model.m}")
    started = time.perf_counter()
    with ProgressSpinner(f"Running {method.name}...", config.get('show_progress_animation', True)):
        result = method.run(model, obs)
    result.diagnostics.setdefault("seconds", time.perf_counter() - started)
    logger.info(f"infer: {method.name} finished in {result.diagnostics['seconds']:.3f}s")
    return RunReport.from_result("infer", result, _inputs(parsed, model_file, model, obs), model_file.causes)


def oracle_command(parsed: ParsedArguments, config: dict[str, Any], formatter: OutputFormatter) -> RunReport:
    # oracles are coefficient identities, so signed weights are allowed here
    model_file, model, obs = load_instance(parsed, config, algebraic=True)
    budget = config.get('enumeration_budget')
    started = time.perf_counter()
    diagnostics: dict[str, Any] = {}

    if parsed.kind == 'brute':
        ptilde = brute_force_ptilde(model, obs, budget)
    elif parsed.kind == 'partition':
        ptilde = partition_ptilde(model, obs, budget)
    elif parsed.kind == 'factor':
        ptilde = factor_product_ptilde(model, obs, config.get('mask_cap'))
    elif parsed.kind == 'permanent':
        rows = obs.emission_rows(model)
        if rows.shape[0] != rows.shape[1]:
            raise DomainError(
                f"permanent needs as many observations as causes, got n={obs.n}, m={model.m}"
            )
        value = permanent(rows)
        diagnostics["permanent"] = value
        # p~(W) at alpha = -1 everywhere
        ptilde = (-1.0) ** obs.n * value
    else:
        raise UnsupportedMethodError(f"Oracle kind '{parsed.kind}' is not supported")

    diagnostics["seconds"] = time.perf_counter() - started
    probability = None
    if parsed.kind != 'permanent' and np.all(model.alpha > 0):
        probability = ptilde / pochhammer(model.alpha_total, obs.n)
    logger.info(f"oracle: kind={parsed.kind} ptilde={ptilde!r}")
    return RunReport(
        command="oracle",
        method=parsed.kind,
        inputs=_inputs(parsed, model_file, model, obs),
        probability=probability,
        ptilde=ptilde,
        diagnostics=diagnostics,
    )


def graph_command(parsed: ParsedArguments, config: dict[str, Any], formatter: OutputFormatter) -> RunReport:
    model_file, model, obs = load_instance(parsed, config)
    eps = config.get("eps", 0.0)
    graph = interaction_graph(model, obs, eps)
    td = tree_decompose(graph)
    validation = validate_decomposition(graph, td)
    diagnostics: dict[str, Any] = {
        "eps": eps,
        "edges": [list(edge) for edge in graph.edges()],
        "bags": [[i for i in range(obs.n) if bag >> i & 1] for bag in td.bags],
        "parent": list(td.parent),
        "root": td.root,
        "width": td.width,
        "valid": validation.ok,
    }
    if not validation.ok:
        diagnostics["violations"] = sorted(validation.kinds())
    if config.get("dump_decomposition"):
        diagnostics["decomposition"] = describe_decomposition(td)
    return RunReport(
        command="graph",
        inputs=_inputs(parsed, model_file, model, obs),
        diagnostics=diagnostics,
    )


def bench_command(parsed: ParsedArguments, config: dict[str, Any], formatter: OutputFormatter) -> RunReport:
    """Time every method on one seeded random instance per (n, m)."""
    seed = config.get("seed", 0)
    rows = []
    for n in parsed.sizes:
        for m in parsed.causes:
            model, obs = random_instance(np.random.default_rng([seed, n, m]), n, m)
            for name in parsed.methods:
                method = MethodFactory.create_method(name, config)
                started = time.perf_counter()
                try:
                    method.run(model, obs)
                    status = "ok"
                except MethodDomainError as e:
                    logger.info(f"bench: {name} refused n={n} m={m}: {e}")
                    status = "refused"
                seconds = time.perf_counter() - started
                logger.info(f"bench: {name} n={n} m={m} {status} in {seconds:.3f}s")
                rows.append({"n": n, "m": m, "method": name, "seconds": seconds, "status": status})
    return RunReport(
        command="bench",
        inputs={
            "sizes": parsed.sizes,
            "causes": parsed.causes,
            "methods": parsed.methods,
            "seed": seed,
        },
        rows=rows,
    )


COMMANDS = {
    'infer': infer_command,
    'oracle': oracle_command,
    'graph': graph_command,
    'bench': bench_command,
}
