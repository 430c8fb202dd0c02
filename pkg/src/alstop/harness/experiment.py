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

"""
Experiment configuration files.

An experiment file is an INI file with three sections:

  [experiment]
  batch_size = 10          ; protocol parameters, defaults from the [experiment] section of alstop.cfg
  subsample_size = 1000
  stopset_size = 1000
  reserve = 500
  initial_size = 10
  test_fraction = 0.5
  repeats = 30
  base_seed = 0
  similarity = auto        ; ranked batch similarity: auto, cosine or euclidean-rbf
  output = results         ; output directory, relative to the experiment file
  workers = 1

  [datasets]
  spam = data/spam.svm     ; name = path (relative to the experiment file)
  spam.format = svmlight   ; optional per-dataset options: format, label_column, max_rows
  blobs = synthetic:classes=2,per_class=1050,separation=3,clusters=1,features=2

  [learners]
  svm = linear             ; name = learner kind
  svm.loss = squared_hinge ; optional hyperparameters as name.parameter
  rf = forest

Unknown sections, keys and dataset/learner options are usage errors.
"""
import configparser, os

from alstop.config import config
from alstop.core.alstopobject import AlstopObject, alstop_typed_init
from alstop.core.errors import UsageError, RunConfigError, TraceFormatError
from alstop.data.trace import TraceConfig
from alstop.harness.loaders import load_dataset, generate_synthetic
from alstop.learners.learnerspec import LearnerSpec, LEARNER_KINDS
from alstop.query.rankedbatch import SIMILARITIES

EXPERIMENT_DEFAULTS = {
    'batch_size': 10,
    'subsample_size': 1000,
    'stopset_size': 1000,
    'reserve': 500,
    'initial_size': 10,
    'test_fraction': 0.5,
    'repeats': 30,
    'base_seed': 0,
    'similarity': 'auto',
    'output': 'results',
    'workers': 1,
}

DATASET_OPTIONS = ('format', 'label_column', 'max_rows')
SYNTHETIC_OPTIONS = {'classes': int, 'per_class': int, 'separation': float, 'clusters': int, 'features': int}


def experiment_defaults():
    defaults = dict(EXPERIMENT_DEFAULTS)
    for key, val in EXPERIMENT_DEFAULTS.items():
        defaults[key] = config.get_typed('experiment', key, val)
    defaults['workers'] = config.get_typed('general', 'workers', defaults['workers'])
    return defaults


def parse_synthetic(source):
    """
    Parse "synthetic:classes=2,per_class=500,..." into generate_synthetic keyword arguments.
    """
    _, _, body = source.partition(':')
    kargs = {}
    for item in body.split(','):
        item = item.strip()
        if item == '':
            continue
        key, sep, val = item.partition('=')
        key = key.strip()
        if sep == '' or key not in SYNTHETIC_OPTIONS:
            raise UsageError("alstop.harness.parse_synthetic: bad synthetic dataset option " + repr(item))
        try:
            kargs[key] = SYNTHETIC_OPTIONS[key](val.strip())
        except ValueError:
            raise UsageError("alstop.harness.parse_synthetic: bad value for " + key + ": " + repr(val))
    names = {'classes': 'n_classes', 'clusters': 'clusters_per_class', 'features': 'n_features'}
    return dict((names.get(k, k), v) for k, v in kargs.items())


class DatasetSource(AlstopObject):

    """
    Where a dataset comes from: a file path with loader options, or 'synthetic:...' parameters.
    """

    @alstop_typed_init({'name': str, 'source': str, 'options': dict})
    def __init__(self, name, source, options):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.name = name
        self.source = source
        self.options = options

    @classmethod
    def create(cls, name, source, options=None):
        options = dict(options or {})
        for key in options:
            if key not in DATASET_OPTIONS:
                raise UsageError("alstop.harness.DatasetSource.create: unknown option " + repr(key) + " for dataset " + name)
        if 'max_rows' in options:
            options['max_rows'] = int(options['max_rows'])
        if source.startswith('synthetic:'):
            parse_synthetic(source)
        return cls(str(name), str(source), options)

    @property
    def is_synthetic(self):
        return self.source.startswith('synthetic:')

    def load(self, seed=0):
        if self.is_synthetic:
            return generate_synthetic(seed=seed, name=self.name, **parse_synthetic(self.source))
        return load_dataset(self.source, format=self.options.get('format'), label_column=self.options.get('label_column'),
                            name=self.name, max_rows=self.options.get('max_rows'), seed=seed)


class ExperimentConfig(AlstopObject):

    @alstop_typed_init({'datasets': [DatasetSource], 'learners': [LearnerSpec], 'learner_names': [str],
                        'trace_config': TraceConfig, 'repeats': int, 'base_seed': int, 'similarity': str,
                        'output': str, 'workers': int})
    def __init__(self, datasets, learners, learner_names, trace_config, repeats, base_seed, similarity, output, workers):
        """
        Private constructor, as per alstop coding guidelines. Use .create method instead.
        """
        self.datasets = datasets
        self.learners = learners
        self.learner_names = learner_names
        self.trace_config = trace_config
        self.repeats = repeats
        self.base_seed = base_seed
        self.similarity = similarity
        self.output = output
        self.workers = workers

    @classmethod
    def create(cls, datasets, learners, trace_config=None, repeats=30, base_seed=0, similarity='auto', output='results',
               workers=1, learner_names=None):
        if len(datasets) == 0:
            raise UsageError("alstop.harness.ExperimentConfig.create: no datasets given")
        if len(learners) == 0:
            raise UsageError("alstop.harness.ExperimentConfig.create: no learners given")
        if int(repeats) < 1:
            raise RunConfigError("alstop.harness.ExperimentConfig.create: repeats must be >= 1")
        if int(workers) < 1:
            raise RunConfigError("alstop.harness.ExperimentConfig.create: workers must be >= 1")
        if similarity not in SIMILARITIES:
            raise RunConfigError("alstop.harness.ExperimentConfig.create: similarity must be one of " + ", ".join(SIMILARITIES))
        if trace_config is None:
            trace_config = TraceConfig.create()
        if learner_names is None:
            learner_names = [spec.kind for spec in learners]
        if len(set(learner_names)) != len(learner_names) or len(set(d.name for d in datasets)) != len(datasets):
            raise UsageError("alstop.harness.ExperimentConfig.create: dataset and learner names must be unique")
        return cls(list(datasets), list(learners), [str(n) for n in learner_names], trace_config, int(repeats),
                   int(base_seed), similarity, str(output), int(workers))


def _split_option(key, section):
    name, sep, option = key.partition('.')
    if sep and (name == '' or option == ''):
        raise UsageError("alstop.harness.read_experiment_config: malformed key " + repr(key) + " in [" + section + "]")
    return name, (option if sep else None)


def read_experiment_config(path):
    """
    Parse an experiment INI file into an ExperimentConfig. Paths in it are taken relative to the
    file's directory.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=(';',), interpolation=None)
    parser.optionxform = str
    try:
        with open(path, encoding='utf-8') as f:
            parser.read_file(f, source=str(path))
    except configparser.Error as e:
        raise UsageError("alstop.harness.read_experiment_config: " + str(e).replace("\n", " "))
    except IOError as e:
        raise UsageError("alstop.harness.read_experiment_config: cannot read " + str(path) + ": " + str(e))
    base = os.path.dirname(os.path.abspath(path))

    for section in parser.sections():
        if section not in ('experiment', 'datasets', 'learners'):
            raise UsageError("alstop.harness.read_experiment_config: unknown section [" + section + "]")

    settings = experiment_defaults()
    if parser.has_section('experiment'):
        for key, raw in parser.items('experiment'):
            if key not in EXPERIMENT_DEFAULTS:
                raise UsageError("alstop.harness.read_experiment_config: unknown key " + repr(key) + " in [experiment]")
            try:
                settings[key] = type(EXPERIMENT_DEFAULTS[key])(raw.strip())
            except ValueError:
                raise UsageError("alstop.harness.read_experiment_config: bad value " + repr(raw) + " for " + key)

    sources, options = {}, {}
    order = []
    if parser.has_section('datasets'):
        for key, raw in parser.items('datasets'):
            name, option = _split_option(key, 'datasets')
            if option is None:
                raw = raw.strip()
                sources[name] = raw if raw.startswith('synthetic:') else os.path.join(base, raw)
                order.append(name)
            else:
                options.setdefault(name, {})[option] = raw.strip()
    for name in options:
        if name not in sources:
            raise UsageError("alstop.harness.read_experiment_config: options given for undeclared dataset " + repr(name))
    datasets = [DatasetSource.create(name, sources[name], options.get(name)) for name in order]

    kinds, hyper = {}, {}
    lorder = []
    if parser.has_section('learners'):
        for key, raw in parser.items('learners'):
            name, option = _split_option(key, 'learners')
            if option is None:
                if raw.strip() not in LEARNER_KINDS:
                    raise UsageError("alstop.harness.read_experiment_config: unknown learner kind " + repr(raw.strip()) + " for " + name)
                kinds[name] = raw.strip()
                lorder.append(name)
            else:
                hyper.setdefault(name, {})[option] = raw.strip()
    for name in hyper:
        if name not in kinds:
            raise UsageError("alstop.harness.read_experiment_config: hyperparameters given for undeclared learner " + repr(name))
    try:
        learners = [LearnerSpec.create(kinds[name], 0, hyper.get(name)) for name in lorder]
    except RunConfigError as e:
        raise UsageError(str(e))

    try:
        trace_config = TraceConfig.create(settings['batch_size'], settings['subsample_size'], settings['stopset_size'],
                                          settings['reserve'], settings['initial_size'], settings['test_fraction'])
    except TraceFormatError as e:
        raise UsageError(str(e))
    output = settings['output']
    if not os.path.isabs(output):
        output = os.path.join(base, output)
    return ExperimentConfig.create(datasets, learners, trace_config, settings['repeats'], settings['base_seed'],
                                   settings['similarity'], output, settings['workers'], learner_names=lorder)
