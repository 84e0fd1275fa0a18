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

import json

from click import testing
import fixtures

from jforge import cli
from jforge.tests import base
from jforge.tests import fixtures as jfixtures


class TestCase(base.TestCase):
    """Test case base class for all functional tests."""

    def setUp(self):
        super(TestCase, self).setUp()
        self.useFixture(fixtures.FakeLogger())
        self.workspace = self.useFixture(jfixtures.AlgebraWorkspace())
        self.runner = testing.CliRunner()

    def run_cli(self, *args, **kwargs):
        """Runs jforge with args and asserts the exit code."""
        exit_code = kwargs.pop('exit_code', 0)
        result = self.runner.invoke(cli.jforge, list(args),
                                    catch_exceptions=False)
        self.assertEqual(exit_code, result.exit_code, result.output)
        return result

    def run_json(self, *args, **kwargs):
        return json.loads(self.run_cli(*args, **kwargs).output)

    def run_twice(self, *args, **kwargs):
        """Runs jforge twice; both runs must print the same bytes."""
        first = self.run_cli(*args, **kwargs).output
        second = self.run_cli(*args, **kwargs).output
        self.assertEqual(first, second)
        return first

    def build_file(self, name, *args):
        """Stores the algebra file a construct command prints."""
        return self.workspace.write_text(name, self.run_twice(*args))

    def assertChecks(self, path, *flags):
        doc = self.run_json('check', *(flags + (path,)))
        self.assertTrue(doc['ok'], doc)
        return doc

    def add_subspaces(self, path, **subspaces):
        """Rewrites the algebra file at path with extra subspaces."""
        with open(path) as f:
            doc = json.load(f)
        doc.setdefault('subspaces', {}).update(subspaces)
        with open(path, 'w') as f:
            json.dump(doc, f)
        return path

    def catalog_file(self, name, *params):
        path = self.workspace.join(name + '.json')
        args = ['catalog', 'get', name, '-o', path]
        for p in params:
            args.extend(['--param', p])
        self.run_cli(*args)
        return path
