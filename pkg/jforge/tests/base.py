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

import testtools

from jforge import conf
from jforge import linalg


def F(value):
    return linalg.to_fraction(value)


def vec(*values):
    return linalg.vector(values)


class TestCase(testtools.TestCase):
    """Test case base class for all tests."""

    def setUp(self):
        super(TestCase, self).setUp()
        self.cfg = conf.Conf(
            debug=os.environ.get('JFORGE_TEST_DEBUG', False),
            max_dim=os.environ.get('JFORGE_TEST_MAX_DIM', 40),
            verify=True,
        )

    def assertSameSpace(self, expected, observed):
        self.assertEqual(expected.ambient_dim, observed.ambient_dim)
        self.assertEqual(expected.basis, observed.basis)
