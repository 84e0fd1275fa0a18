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

"""Collect testscenarios.WithScenarios test cases under pytest.

pytest rebinds each test method on the original instance before running
it, so the clones made by WithScenarios.run call the method of the
instance without scenario attributes. Expand each scenario into its own
class at collection time instead, as the testtools runners do.
"""

import inspect

from _pytest import unittest as pytest_unittest
import testscenarios


def pytest_pycollect_makeitem(collector, name, obj):
    if not (inspect.isclass(obj) and
            issubclass(obj, testscenarios.WithScenarios)):
        return None
    scenarios = getattr(obj, 'scenarios', None)
    if not scenarios:
        return None
    items = []
    for scenario_name, params in scenarios:
        # testscenarios sets these on the instance, where functions stay
        # unbound; keep them unbound as class attributes too.
        attrs = dict((key, staticmethod(value)
                      if inspect.isfunction(value) else value)
                     for key, value in params.items())
        attrs['scenarios'] = None
        attrs['__module__'] = obj.__module__
        cls = type(obj.__name__, (obj,), attrs)
        item = pytest_unittest.UnitTestCase.from_parent(
            collector, name='%s[%s]' % (name, scenario_name))
        item._obj = cls
        items.append(item)
    return items
