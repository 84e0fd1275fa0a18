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

from __future__ import absolute_import

import json
import os

import fixtures
from testtools import content
from testtools import content_type

from jforge import fileformat


class AlgebraWorkspace(fixtures.Fixture):
    """A temporary directory of JSON documents.

    Every file written through the fixture, and every file a command wrote
    into the directory, is attached to the test as the 'workspace' detail.
    """

    def setUp(self):
        super(AlgebraWorkspace, self).setUp()
        self.path = self.useFixture(fixtures.TempDir()).path
        self.addDetail(
            'workspace',
            content.Content(
                content_type.UTF8_TEXT,
                self._get_files,
            ),
        )

    def _get_files(self):
        for name in sorted(os.listdir(self.path)):
            with open(self.join(name)) as f:
                text = f.read()
            yield ('\n>> ' + name + '\n' + text).encode('utf8')

    def join(self, name):
        return os.path.join(self.path, name)

    def write(self, name, doc):
        """Writes doc as canonical JSON and returns the path."""
        path = self.join(name)
        fileformat.write(doc, path)
        return path

    def write_text(self, name, text):
        path = self.join(name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def read(self, name):
        with open(self.join(name)) as f:
            return f.read()

    def load(self, name):
        return json.loads(self.read(name))
