//! Word-packed Boolean vectors and square Boolean matrices.

const WORD_BITS: usize = u64::BITS as usize;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Iterates the set bit positions of a packed word slice in ascending order.
pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD_BITS + bit)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolVector {
    len: usize,
    words: Vec<u64>,
}

impl BoolVector {
    pub fn zeros(len: usize) -> Self {
        BoolVector { len, words: vec![0; words_for(len)] }
    }

    /// Panics if an index is `>= len`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BoolVector::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BoolVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// 0/1 coefficients, for handing to an integer convolution.
    pub fn to_counts(&self) -> Vec<u64> {
        (0..self.len).map(|i| u64::from(self.get(i))).collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Square Boolean matrix packed row-wise, 64 columns per word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        let stride = words_for(n);
        BoolMatrix { n, stride, words: vec![0; n * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Row `i` of the result is `rows[i]`.
    pub fn from_rows(rows: &[BoolVector]) -> Self {
        let n = rows.len();
        let mut m = BoolMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has length {}, expected {n}", row.len());
            m.words[i * m.stride..(i + 1) * m.stride].copy_from_slice(row.words());
        }
        m
    }

    /// Column `j` of the result is `columns[j]`.
    pub fn from_columns(columns: &[BoolVector]) -> Self {
        let n = columns.len();
        let mut m = BoolMatrix::zeros(n);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column {j} has length {}, expected {n}", col.len());
            for k in col.ones() {
                m.set(k, j, true);
            }
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        self.words[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n);
        let mask = 1u64 << (j % WORD_BITS);
        let word = &mut self.words[i * self.stride + j / WORD_BITS];
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row_words(i))
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}
