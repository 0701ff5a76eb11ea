from typing import List, Optional, Sequence, Tuple
from hopfsage.models.field import Field
from hopfsage.models.hopf import (Diagnostic, FinAlgebra, FinCoalgebra,
                                  HopfAlgebra, HopfData)
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.utils.axioms import identity_diagnostics, shape_diagnostics
from hopfsage.utils.errors import (FieldError, InvalidStructureError,
                                   PreconditionError)
from hopfsage.utils.logging import logger


class HopfService:
    """Validation of Hopf algebra structure constants and fixture builders."""

    @staticmethod
    def algebra_diagnostics(algebra: FinAlgebra) -> List[Diagnostic]:
        """Associativity and unit laws, checked on all basis tuples."""
        f, d = algebra.field, algebra.dim
        problems = shape_diagnostics('mult', algebra.mult, (d, d * d)) + \
            shape_diagnostics('unit', algebra.unit, (d, 1))
        if problems:
            return problems
        m, u = algebra.mult, algebra.unit
        i_d = Matrix.identity(f, d)
        problems += identity_diagnostics(
            'associativity', m @ LA.kronecker(m, i_d),
            m @ LA.kronecker(i_d, m), (d, d, d))
        problems += identity_diagnostics(
            'left unit', m @ LA.kronecker(u, i_d), i_d, (d,))
        problems += identity_diagnostics(
            'right unit', m @ LA.kronecker(i_d, u), i_d, (d,))
        return problems

    @staticmethod
    def coalgebra_diagnostics(coalgebra: FinCoalgebra) -> List[Diagnostic]:
        f, d = coalgebra.field, coalgebra.dim
        problems = shape_diagnostics('comult', coalgebra.comult, (d * d, d)) \
            + shape_diagnostics('counit', coalgebra.counit, (1, d))
        if problems:
            return problems
        c, e = coalgebra.comult, coalgebra.counit
        i_d = Matrix.identity(f, d)
        problems += identity_diagnostics(
            'coassociativity', LA.kronecker(c, i_d) @ c,
            LA.kronecker(i_d, c) @ c, (d,))
        problems += identity_diagnostics(
            'left counit', LA.kronecker(e, i_d) @ c, i_d, (d,))
        problems += identity_diagnostics(
            'right counit', LA.kronecker(i_d, e) @ c, i_d, (d,))
        return problems

    @staticmethod
    def bialgebra_diagnostics(algebra: FinAlgebra,
                              coalgebra: FinCoalgebra) -> List[Diagnostic]:
        f, d = algebra.field, algebra.dim
        m, u = algebra.mult, algebra.unit
        c, e = coalgebra.comult, coalgebra.counit
        i_d = Matrix.identity(f, d)
        middle = LA.kron(i_d, Matrix.swap(f, d, d), i_d)
        problems = identity_diagnostics(
            'comultiplication multiplicative', c @ m,
            LA.kronecker(m, m) @ middle @ LA.kronecker(c, c), (d, d))
        problems += identity_diagnostics(
            'comultiplication unital', c @ u, LA.kronecker(u, u), ())
        problems += identity_diagnostics(
            'counit multiplicative', e @ m, LA.kronecker(e, e), (d, d))
        problems += identity_diagnostics(
            'counit unital', e @ u, Matrix.identity(f, 1), ())
        return problems

    @staticmethod
    def antipode_diagnostics(algebra: FinAlgebra, coalgebra: FinCoalgebra,
                             antipode: Matrix) -> List[Diagnostic]:
        f, d = algebra.field, algebra.dim
        problems = shape_diagnostics('antipode', antipode, (d, d))
        if problems:
            return problems
        m, u = algebra.mult, algebra.unit
        c, e = coalgebra.comult, coalgebra.counit
        i_d = Matrix.identity(f, d)
        problems += identity_diagnostics(
            'left antipode', m @ LA.kronecker(antipode, i_d) @ c, u @ e, (d,))
        problems += identity_diagnostics(
            'right antipode', m @ LA.kronecker(i_d, antipode) @ c, u @ e, (d,))
        return problems

    @staticmethod
    def validate_hopf(data: HopfData
                      ) -> Tuple[Optional[HopfAlgebra], List[Diagnostic]]:
        """Validate raw structure constants.

        Returns (HopfAlgebra, []) when every axiom holds, otherwise
        (None, diagnostics) naming each failed axiom.
        """
        if data.dim < 1:
            return None, [Diagnostic('dimension mismatch', (),
                                     f"dimension {data.dim} < 1")]
        algebra = FinAlgebra(data.field, data.dim, data.mult, data.unit)
        coalgebra = FinCoalgebra(data.field, data.dim, data.comult,
                                 data.counit)
        problems = HopfService.algebra_diagnostics(algebra) + \
            HopfService.coalgebra_diagnostics(coalgebra)
        if any(p.axiom == 'dimension mismatch' for p in problems):
            return None, problems
        problems += HopfService.bialgebra_diagnostics(algebra, coalgebra)
        problems += HopfService.antipode_diagnostics(algebra, coalgebra,
                                                     data.antipode)
        if any(p.axiom == 'dimension mismatch' for p in problems):
            return None, problems

        antipode_inv = LA.inverse(data.antipode)
        if antipode_inv is None:
            problems.append(Diagnostic('antipode not bijective'))
        else:
            i_d = Matrix.identity(data.field, data.dim)
            problems += identity_diagnostics(
                'antipode inverse', antipode_inv @ data.antipode, i_d,
                (data.dim,))
            problems += identity_diagnostics(
                'antipode inverse', data.antipode @ antipode_inv, i_d,
                (data.dim,))

        if problems:
            logger.warning(
                f"Hopf algebra '{data.name}' failed validation: "
                f"{'; '.join(str(p) for p in problems)}")
            return None, problems

        return HopfAlgebra(data.name, algebra, coalgebra, data.antipode,
                           antipode_inv), []

    @staticmethod
    def require_hopf(data: HopfData) -> HopfAlgebra:
        hopf, problems = HopfService.validate_hopf(data)
        if hopf is None:
            raise InvalidStructureError(
                f"Invalid Hopf algebra '{data.name}'", problems)
        return hopf

    @staticmethod
    def revalidate(hopf: HopfAlgebra) -> List[Diagnostic]:
        return HopfService.validate_hopf(HopfService.to_data(hopf))[1]

    @staticmethod
    def to_data(hopf: HopfAlgebra) -> HopfData:
        return HopfData(hopf.name, hopf.field, hopf.dim, hopf.mult, hopf.unit,
                        hopf.comult, hopf.counit, hopf.antipode)

    # builders

    @staticmethod
    def group_table_data(field: Field, table: Sequence[Sequence[int]],
                         name: str = 'kG') -> HopfData:
        """Raw data of the group algebra kG from a 0-based Cayley table."""
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise PreconditionError("group table must be a non-empty square")
        if any(not 0 <= x < n for row in table for x in row):
            raise PreconditionError("group table entries out of range")
        for row in table:
            if len(set(row)) != n:
                raise PreconditionError("group table is not a Latin square")
        for col in range(n):
            if len({table[r][col] for r in range(n)}) != n:
                raise PreconditionError("group table is not a Latin square")
        identity = next((e for e in range(n)
                         if list(table[e]) == list(range(n))
                         and all(table[r][e] == r for r in range(n))), None)
        if identity is None:
            raise PreconditionError("group table has no identity element")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise PreconditionError(
                            f"group table is not associative at "
                            f"({a + 1},{b + 1},{c + 1})")
        inverse = [next(b for b in range(n) if table[a][b] == identity)
                   for a in range(n)]

        mult = [[field.zero] * (n * n) for _ in range(n)]
        comult = [[field.zero] * n for _ in range(n * n)]
        for a in range(n):
            comult[a * n + a][a] = field.one
            for b in range(n):
                mult[table[a][b]][a * n + b] = field.one
        unit = [[field.one if i == identity else field.zero] for i in range(n)]
        return HopfData(
            name=name, field=field, dim=n,
            mult=Matrix.from_rows(field, mult, n * n),
            unit=Matrix.from_rows(field, unit, 1),
            comult=Matrix.from_rows(field, comult, n),
            counit=Matrix.from_rows(field, [[1] * n], n),
            antipode=Matrix.permutation(field, inverse))

    @staticmethod
    def group_algebra(field: Field, table: Sequence[Sequence[int]],
                      name: str = 'kG') -> HopfAlgebra:
        return HopfService.require_hopf(
            HopfService.group_table_data(field, table, name))

    @staticmethod
    def cyclic_table(n: int) -> List[List[int]]:
        return [[(a + b) % n for b in range(n)] for a in range(n)]

    @staticmethod
    def sweedler_data(field: Field, name: str = 'SW4') -> HopfData:
        """Sweedler's four-dimensional algebra on the basis 1, g, x, gx.

        Basis element g^a x^b has index a + 2b; xg = -gx, x^2 = 0, g^2 = 1.
        """
        if field.characteristic == 2:
            raise FieldError("Sweedler's algebra needs characteristic != 2")

        def index(a: int, b: int) -> int:
            return a + 2 * b

        mult = [[field.zero] * 16 for _ in range(4)]
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    for d in range(2):
                        if b + d > 1:
                            continue
                        sign = -1 if b * c else 1
                        col = index(a, b) * 4 + index(c, d)
                        mult[index((a + c) % 2, b + d)][col] = field(sign)

        comult = [[field.zero] * 4 for _ in range(16)]

        def put(i: int, left: int, right: int, c: int = 1):
            comult[left * 4 + right][i] = field(c)

        put(0, 0, 0)            # 1 -> 1 (x) 1
        put(1, 1, 1)            # g -> g (x) g
        put(2, 2, 0)            # x -> x (x) 1 + g (x) x
        put(2, 1, 2)
        put(3, 3, 1)            # gx -> gx (x) g + 1 (x) gx
        put(3, 0, 3)

        antipode = [[field.zero] * 4 for _ in range(4)]
        antipode[0][0] = field.one          # S(1) = 1
        antipode[1][1] = field.one          # S(g) = g
        antipode[3][2] = field(-1)          # S(x) = -gx
        antipode[2][3] = field.one          # S(gx) = x
        return HopfData(
            name=name, field=field, dim=4,
            mult=Matrix.from_rows(field, mult, 16),
            unit=Matrix.column_vector(field, [1, 0, 0, 0]),
            comult=Matrix.from_rows(field, comult, 4),
            counit=Matrix.row_vector(field, [1, 1, 0, 0]),
            antipode=Matrix.from_rows(field, antipode, 4))

    @staticmethod
    def sweedler_h4(field: Field, name: str = 'SW4') -> HopfAlgebra:
        return HopfService.require_hopf(HopfService.sweedler_data(field, name))

    @staticmethod
    def antipode_order(hopf: HopfAlgebra, limit: int = 64) -> Optional[int]:
        i_d = Matrix.identity(hopf.field, hopf.dim)
        power = hopf.antipode
        for k in range(1, limit + 1):
            if power == i_d:
                return k
            power = power @ hopf.antipode
        return None
