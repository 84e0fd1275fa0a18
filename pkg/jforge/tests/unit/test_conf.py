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

import mock

from jforge import conf
from jforge import exception
from jforge.tests.unit import base


class ConfTestCase(base.TestCase):

    def test_defaults(self):
        cfg = conf.Conf()
        self.assertEqual(conf.DEFAULT_DEBUG, cfg.debug)
        self.assertEqual(conf.DEFAULT_MAX_DIM, cfg.max_dim)
        self.assertEqual(conf.DEFAULT_VERIFY, cfg.verify)

    @mock.patch.dict(os.environ, {'JFORGE_DEBUG': '1',
                                  'JFORGE_MAX_DIM': '12',
                                  'JFORGE_VERIFY': 'off'})
    def test_environment(self):
        cfg = conf.Conf()
        self.assertTrue(cfg.debug)
        self.assertEqual(12, cfg.max_dim)
        self.assertFalse(cfg.verify)

    @mock.patch.dict(os.environ, {'JFORGE_MAX_DIM': '12'})
    def test_override_beats_environment(self):
        self.assertEqual(5, conf.Conf(max_dim=5).max_dim)

    def test_negative_bound(self):
        self.assertEqual(0, conf.Conf(max_dim=-3).max_dim)

    def test_check_dim(self):
        cfg = conf.Conf(max_dim=4)
        cfg.check_dim(4)
        e = self.assertRaises(exception.DimensionLimitExceeded,
                              cfg.check_dim, 5, what='TKK')
        self.assertEqual(5, e.dim)
        self.assertEqual(4, e.max_dim)
        self.assertIn('TKK', e.message)

    def test_get(self):
        self.assertIs(self.cfg, conf.get(self.cfg))
        self.assertIsInstance(conf.get(), conf.Conf)
