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

"""
Exceptions raised by jforge.

Each exception class declares a ``msg_fmt`` that is interpolated with the
keyword arguments passed to the constructor. The keyword arguments are also
available as attributes, so callers can inspect the data behind a typed
outcome:

..code:: python

    from jforge import exception
    from jforge import linalg

    try:
        spaces = linalg.rational_spectral(m)
    except exception.SplitFailure as e:
        print(e.factors)
"""


class JforgeException(Exception):
    """Base exception for every typed outcome in jforge."""

    msg_fmt = "An unknown exception occurred."

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs
        for key, value in kwargs.items():
            setattr(self, key, value)
        if not message:
            try:
                message = self.msg_fmt % kwargs
            except (KeyError, TypeError):
                message = self.msg_fmt
        self.message = message
        super(JforgeException, self).__init__(message)


class InvalidInput(JforgeException, ValueError):
    msg_fmt = "Invalid input: %(reason)s"


class DimensionMismatch(InvalidInput):
    msg_fmt = "Dimension mismatch: %(reason)s"


class DimensionLimitExceeded(InvalidInput):
    msg_fmt = ("Refusing to build %(what)s of dimension %(dim)d; the "
               "configured maximum is %(max_dim)d (JFORGE_MAX_DIM).")


class UnknownName(InvalidInput):
    msg_fmt = "Unknown catalog entry %(name)s."


class BadParams(InvalidInput):
    msg_fmt = "Bad parameters for %(name)s: %(reason)s"


class AlgebraFileError(InvalidInput):
    msg_fmt = "%(path)s: %(field)s: %(reason)s"


class SingularMatrix(JforgeException):
    msg_fmt = "Matrix is singular."


class SplitFailure(JforgeException):
    msg_fmt = ("Characteristic polynomial does not split over the "
               "rationals; irreducible factors: %(factors)s")


class VerificationFailed(JforgeException):
    msg_fmt = "Verification of %(what)s failed: %(detail)s"


class NotJordanAlgebra(JforgeException):
    msg_fmt = "Structure constants do not define a Jordan algebra: %(detail)s"


class NotPseudoEuclidean(JforgeException):
    msg_fmt = "Form is not an associative scalar product: %(detail)s"


class NotAnIdeal(JforgeException):
    msg_fmt = "Subspace is not an ideal."


class Degenerate(JforgeException):
    msg_fmt = "Form restricted to the ideal is degenerate."


class NotARepresentation(JforgeException):
    msg_fmt = "Action is not a Jordan representation: fails at %(index)s."


class NotAdmissible(JforgeException):
    msg_fmt = "Not admissible: condition %(condition)s fails."


class BadCocycle(JforgeException):
    msg_fmt = "Cocycle fails identity %(identity)s at %(index)s."


class SpecInvalid(JforgeException):
    msg_fmt = "Invalid extension data: %(reason)s"


class BadDirection(JforgeException):
    msg_fmt = "Cannot peel along this vector: %(reason)s"


class NotMaximalComplemented(JforgeException):
    msg_fmt = "Ideal cannot be peeled: %(reason)s"


class NondegenerateIdeal(JforgeException):
    msg_fmt = ("Ideal is nondegenerate (I and its orthogonal meet in zero); "
               "split it off instead.")


class NotDirect(JforgeException):
    msg_fmt = ("L(J^2) and [L(J),L(J)] intersect in a space of dimension "
               "%(dim)d.")


class JacobiFailure(JforgeException):
    msg_fmt = "Jacobi identity fails at %(index)s."


class InvarianceFailure(JforgeException):
    msg_fmt = "Form is not invariant: %(detail)s"


class NotADerivation(JforgeException):
    msg_fmt = "Operator is not a derivation: fails at %(index)s."


class NotAntisymmetric(JforgeException):
    msg_fmt = "Tensor is not antisymmetric."


class YbeFails(JforgeException):
    msg_fmt = "r does not solve the Jordan Yang-Baxter equation."


class CompatibilityFails(JforgeException):
    msg_fmt = "Compatibility condition %(condition)s fails."


class ZeroAlgebra(JforgeException):
    msg_fmt = "Operation needs a nonzero algebra."


class NoIsotropicAnnDirection(JforgeException):
    msg_fmt = "Both U and V meet the annihilator in zero."


class ZeroEigenvalue(JforgeException):
    msg_fmt = "Derivation has eigenvalue 0; it is not invertible."


class NoEigenvector(JforgeException):
    msg_fmt = "No eigenvector with rational eigenvalue in %(where)s."


class BadComponents(JforgeException):
    msg_fmt = "Invalid irreducible components: %(reason)s"


class NotAnIntertwiner(JforgeException):
    msg_fmt = "Map does not intertwine the adjoint and coadjoint actions."
