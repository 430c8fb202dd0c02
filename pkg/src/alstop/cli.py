#
#    The active-learning stopping toolkit (alstop)
#    Copyright (C) 2026 The alstop developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as
#    published by the Free Software Foundation, either version 3 of the
#    License, or (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.
#
#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.

import os, sys

import alstop
from alstop import cout, cerr, cli_modules
from alstop.core.console import set_verbosity, get_verbosity
from alstop.core.errors import AlstopError, UsageError


help_text = """
usage: alstop [--version] [--help] [-c section.option=value] [-v] [-o <dir>] [--workers <n>]
              <command> [<args>] [options]

Options understood by the commands:
   --criteria <id,...>        criteria to evaluate (default: the whole catalogue)
   --scenario <name>          cost scenario (mammogram, marketing)
   --label-cost <l>           cost of one label
   --misclass-cost <m>        cost of one misclassification
   --lifetime <n>             number of predictions the model makes in its lifetime
   --accuracy <a> --labels <j>  a single stopping outcome to cost
   --treatment <t>            penalize, include or exclude runs where a criterion never stopped
   --alpha <a>                significance level
   --model <kind>             restrict the analysis to one learner kind
   --no-figures               skip SVG output
""".strip()

help_footer = """
'alstop <command> help' describes a single command.
""".strip()

_float_options = {'--label-cost': 'label_cost', '--misclass-cost': 'misclassification_cost',
                  '--lifetime': 'lifetime_predictions', '--accuracy': 'accuracy', '--alpha': 'alpha'}
_string_options = {'--scenario': 'scenario', '--treatment': 'treatment', '--model': 'model', '--output': 'output', '-o': 'output'}


def _value(argi, arg):
    try:
        return next(argi)
    except StopIteration:
        raise UsageError("alstop: option " + arg + " needs a value")


def _number(kind, arg, raw):
    try:
        return kind(raw)
    except ValueError:
        raise UsageError("alstop: option " + arg + " expects a number, got " + repr(raw))


def _set_config(assignment):
    key, eq, val = assignment.partition('=')
    section, dot, option = key.partition('.')
    if not eq or not dot or not option:
        raise UsageError("alstop: -c expects section.option=value, got " + repr(assignment))
    if not alstop.config.has_section(section):
        alstop.config.add_section(section)
    alstop.config.set(section, option, val)


def parse_args(argv):
    """
    Split argv (without the program name) into commands and an attribute bag of options.
    Options that are not given are absent from the bag.
    """
    args = lambda: None # dict-like object using attributes

    args.commands = []
    args.cwd = os.getcwd()
    args.configopts = {}
    no_options_mode = False

    argi = iter(argv)
    for arg in argi:

        if (not arg.startswith("-") or no_options_mode or arg == '-'):
            args.commands += [arg]

        elif arg == "--":
            no_options_mode = True

        elif arg == '--version':
            args.commands = ["version"]

        elif arg == "--help" or arg == "-h":
            args.commands = ["help"] + args.commands

        elif arg == '-c':
            assignment = _value(argi, arg)
            _set_config(assignment)
            key, _, val = assignment.partition('=')
            args.configopts[key] = val

        elif arg == '-v' or arg == '--verbose':
            args.verbosity = getattr(args, 'verbosity', 0) + 1

        elif arg == '--workers':
            args.workers = _number(int, arg, _value(argi, arg))
            if args.workers < 1:
                raise UsageError("alstop: --workers must be at least 1")

        elif arg == '--labels':
            args.labels = _number(float, arg, _value(argi, arg))

        elif arg in _float_options:
            setattr(args, _float_options[arg], _number(float, arg, _value(argi, arg)))

        elif arg in _string_options:
            setattr(args, _string_options[arg], _value(argi, arg))

        elif arg == '--criteria':
            args.criteria = [c.strip() for c in _value(argi, arg).split(',') if c.strip() != '']

        elif arg == '--no-figures':
            args.figures = False

        else:
            raise UsageError("alstop: unknown option " + arg)

    # Move 'help' to the last position
    if "help" in args.commands:
        args.commands += [args.commands.pop(args.commands.index("help"))]

    if len(args.commands) == 0:
        args.commands = ['help']

    return args


def run(argv):
    args = parse_args(argv)
    if hasattr(args, 'verbosity'):
        set_verbosity(get_verbosity() + args.verbosity)

############## HELP ####################
    if args.commands == ["help"]:
        cout(help_text)
        for mod in cli_modules.values():
            cout("")
            module = __import__(mod, fromlist=[''])
            cout(module.help_text)
        cout("")
        cout(help_footer)

############## VERSION ###############
    elif args.commands[0] == "version":
        cout("alstop v" + alstop.version + " (" + alstop.version_date + "), " + alstop.copyright_note)

############## MODULES ###############
    elif args.commands[0] in cli_modules:
        module = __import__(cli_modules[args.commands[0]], fromlist=[''])
        module.main(args.commands[1:], args)

######################################
    else:
        context = alstop.config.get("cli", "context")
        if context is not None and context in cli_modules:
            module = __import__(cli_modules[context], fromlist=[''])
            module.main(args.commands, args)
        else:
            raise UsageError("Unknown alstop command: " + args.commands[0])


def main(argv=None):
    """
    Entry point of the alstop command. Errors are reported on stderr and mapped to the exit code of
    their family: 1 for usage errors, 2 for data errors, 3 for run errors.
    """
    if argv is None:
        argv = sys.argv[1:]
    try:
        run(argv)
    except AlstopError as e:
        cerr("alstop: error:", e)
        sys.exit(e.exit_code)
    except (IOError, OSError) as e:
        cerr("alstop: error:", e)
        sys.exit(2)
    sys.exit(0)
