"""Sparse exact linear algebra: rank and kernel over the rationals or GF(p).

Matrices carry their basis labels (rows are (n-1)-chains, columns n-chains,
when they come from a differential). Columns are dicts row_index -> scalar;
elimination is column-wise with unit-normalized pivots and no tolerances of
any kind. Over GF(2) the rank computation packs columns into integer
bitmasks, which is substantially faster on the larger matrices.
"""


class ExactMatrix:
    def __init__(self, row_labels, col_labels, columns, field):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.columns = [dict(c) for c in columns]
        assert len(self.columns) == len(self.col_labels)
        self.field = field
        self.rows = len(self.row_labels)
        self.cols = len(self.col_labels)
        self._rank = None
        self._kernel = None

    def entry(self, i, j):
        return self.columns[j].get(i, self.field.zero)

    def to_dense(self):
        return [
            [self.entry(i, j) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def is_zero(self):
        return all(not c for c in self.columns)

    def rank(self):
        if self._rank is None:
            if self.field.characteristic == 2:
                self._rank = self._rank_gf2()
            else:
                self._decompose()
        return self._rank

    def _rank_gf2(self):
        pivots = {}
        rank = 0
        for col in self.columns:
            mask = 0
            for r, v in col.items():
                if v:
                    mask |= 1 << r
            while mask:
                lead = mask.bit_length() - 1
                piv = pivots.get(lead)
                if piv is None:
                    pivots[lead] = mask
                    rank += 1
                    break
                mask ^= piv
        return rank

    def _decompose(self):
        """Column elimination, tracking column combinations for the kernel."""
        one = self.field.one
        pivots = {}
        kernel = []
        for j, column in enumerate(self.columns):
            col = dict(column)
            comb = {j: one}
            while col:
                lead = max(col)
                piv = pivots.get(lead)
                if piv is None:
                    break
                pcol, pcomb = piv
                factor = col[lead]
                for r, v in pcol.items():
                    s = col.get(r, 0) - factor * v
                    if s:
                        col[r] = s
                    else:
                        col.pop(r, None)
                for k, v in pcomb.items():
                    s = comb.get(k, 0) - factor * v
                    if s:
                        comb[k] = s
                    else:
                        comb.pop(k, None)
            if col:
                lead = max(col)
                inv = one / col[lead]
                pivots[lead] = (
                    {r: inv * v for r, v in col.items()},
                    {k: inv * v for k, v in comb.items()},
                )
            else:
                kernel.append(comb)
        self._rank = self.cols - len(kernel)
        self._kernel = kernel

    def kernel_basis(self):
        """Vectors (dicts column_index -> scalar) spanning the kernel."""
        if self._kernel is None:
            self._decompose()
        return self._kernel

    def multiply(self, other):
        """Matrix product self * other; label compatibility is asserted."""
        assert self.col_labels == other.row_labels, "basis mismatch"
        out = []
        for col in other.columns:
            acc = {}
            for k, v in col.items():
                for r, w in self.columns[k].items():
                    s = acc.get(r, 0) + v * w
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
            out.append(acc)
        return ExactMatrix(self.row_labels, other.col_labels, out, self.field)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"
