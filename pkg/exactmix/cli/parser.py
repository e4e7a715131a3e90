"""Command-line argument parsing for exactmix."""

import argparse

from exactmix import __version__
from exactmix.cli.models import ParsedArguments
from exactmix.methods.factory import MethodFactory

ORACLE_KINDS = ['brute', 'partition', 'factor', 'permanent']

# command-line flag destination -> configuration key
CONFIG_FLAGS = {
    'eps': 'eps',
    'seed': 'seed',
    'iterations': 'gibbs_iterations',
    'burn_in': 'burn_in',
    'tol': 'tol',
    'max_iters': 'max_iters',
    'cap': 'mask_cap',
    'dump_decomposition': 'dump_decomposition',
    'output_format': 'output_format',
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _method_list(text: str) -> list[str]:
    methods = [part.strip() for part in text.split(',') if part.strip()]
    unknown = [m for m in methods if m not in MethodFactory.available_methods()]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown method(s): {', '.join(unknown)}")
    return methods


class ArgumentParser:
    """Parses command-line arguments for the exactmix CLI.

    Wraps argparse subcommands; argparse reports usage errors itself and
    exits with status 2.
    """

    def __init__(self, prog: str = 'exactmix'):
        self.parser = self._build(prog)

    def parse(self, args: list[str]) -> ParsedArguments:
        """Parse command-line arguments (excluding program name)."""
        namespace = self.parser.parse_args(args)
        # identity checks: 0 and 0.0 are real overrides
        overrides = {
            key: value
            for dest, key in CONFIG_FLAGS.items()
            if (value := getattr(namespace, dest, None)) is not None and value is not False
        }
        return ParsedArguments(
            command=namespace.command,
            model_path=getattr(namespace, 'model', None),
            obs=getattr(namespace, 'obs', None),
            obs_file=getattr(namespace, 'obs_file', None),
            method=getattr(namespace, 'method', None),
            kind=getattr(namespace, 'kind', None),
            config_path=namespace.config,
            overrides=overrides,
            alpha_scale=getattr(namespace, 'alpha_scale', None),
            sizes=getattr(namespace, 'sizes', None) or [],
            causes=getattr(namespace, 'causes', None) or [],
            methods=getattr(namespace, 'methods', None) or [],
        )

    def _build(self, prog: str) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--config', help='configuration file (default ~/.exactmix_config.json)')
        common.add_argument('--format', dest='output_format', choices=['json', 'tsv'],
                            help='report format (default from config: json)')
        common.add_argument('--cap', type=int, help='mask cap for the dense subset tables')
        common.add_argument('--eps', type=float, help='sparsity threshold on beta (default 0)')

        instance = argparse.ArgumentParser(add_help=False)
        instance.add_argument('--model', required=True,
                              help='model JSON file, or the name of a bundled model (toy.json)')
        group = instance.add_mutually_exclusive_group(required=True)
        group.add_argument('--obs', help='comma-separated vocabulary indices; "" means no observations')
        group.add_argument('--obs-file', help='file with one vocabulary index per line')
        instance.add_argument('--alpha-scale', type=float, help='multiply every prior weight')

        parser = argparse.ArgumentParser(
            prog=prog,
            description='Exact posterior inference for Dirichlet mixtures over a fixed emission table.',
        )
        parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
        parser.set_defaults(config=None)
        sub = parser.add_subparsers(dest='command', required=True)

        infer = sub.add_parser('infer', parents=[common, instance],
                               help='posterior mean (and evidence) for one instance')
        infer.add_argument('--method', default='exact', choices=MethodFactory.available_methods())
        infer.add_argument('--seed', type=int, help='Gibbs seed')
        infer.add_argument('--iterations', type=int, help='Gibbs sweeps')
        infer.add_argument('--burn-in', type=int, help='discarded Gibbs sweeps (default 10%%)')
        infer.add_argument('--tol', type=float, help='EM/VB convergence tolerance')
        infer.add_argument('--max-iters', type=int, help='EM/VB iteration limit')
        infer.add_argument('--dump-decomposition', action='store_true',
                           help='include the tree decomposition in sparse diagnostics')

        oracle = sub.add_parser('oracle', parents=[common, instance],
                                help='unnormalized evidence by a reference computation')
        oracle.add_argument('--kind', default='partition', choices=ORACLE_KINDS)

        graph = sub.add_parser('graph', parents=[common, instance],
                               help='interaction graph and its tree decomposition')
        graph.add_argument('--dump-decomposition', action='store_true',
                           help='include a text rendering of the decomposition')

        bench = sub.add_parser('bench', parents=[common],
                               help='timing matrix over generated instances')
        bench.add_argument('--sizes', type=_int_list, default=[4, 8, 12], help='observation counts, e.g. 4,8,12')
        bench.add_argument('--causes', type=_int_list, default=[3, 100], help='cause counts, e.g. 3,100')
        bench.add_argument('--methods', type=_method_list, default=['exact', 'sparse'],
                           help='methods to time, e.g. exact,sparse,vb')
        bench.add_argument('--seed', type=int, help='instance generator seed')

        return parser
