# -*- coding: utf-8 -*-

# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

import os

from jforge import exception


DEFAULT_DEBUG = False
DEFAULT_MAX_DIM = 32
DEFAULT_VERIFY = True

_FALSE_STRINGS = ('0', 'false', 'no', 'off', '')


def _as_bool(value):
    if isinstance(value, str):
        return value.strip().lower() not in _FALSE_STRINGS
    return bool(value)


class Conf(object):
    """Configuration for jforge constructions and checks."""

    def __init__(self, **overrides):
        self.debug = _as_bool(overrides.get(
            'debug',
            os.environ.get('JFORGE_DEBUG', DEFAULT_DEBUG),
        ))

        self.max_dim = int(overrides.get(
            'max_dim',
            os.environ.get('JFORGE_MAX_DIM', DEFAULT_MAX_DIM),
        ))
        # A zero-dimensional algebra is legal, a negative bound is not.
        self.max_dim = max(0, self.max_dim)

        self.verify = _as_bool(overrides.get(
            'verify',
            os.environ.get('JFORGE_VERIFY', DEFAULT_VERIFY),
        ))

    def check_dim(self, dim, what='algebra'):
        """Raises DimensionLimitExceeded if dim is above the configured
        bound.

        :param dim: dimension about to be built
        :param what: short description used in the error message
        """
        if dim > self.max_dim:
            raise exception.DimensionLimitExceeded(
                what=what, dim=dim, max_dim=self.max_dim)


def get(conf=None):
    """Returns conf, or a Conf built from the environment if conf is None."""
    if conf is None:
        return Conf()
    return conf
