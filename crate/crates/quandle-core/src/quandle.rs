use std::fmt;

use crate::error::QuandleError;
use crate::octahedron::OctahedronModel;
use crate::perm::InnerPerm;

/// Elements are the representatives `0..size`.
pub type Elem = u8;

/// Largest supported quandle order.
pub const MAX_ORDER: usize = 255;

/// A finite quandle stored as its operation table, `table[a][b] = a^b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    name: String,
    size: usize,
    table: Vec<Elem>,
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Idempotence { a: Elem },
    ColumnNotBijective { b: Elem },
    Distributivity { a: Elem, b: Elem, c: Elem },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Idempotence { a } => write!(f, "Q1 fails at a={a}"),
            Violation::ColumnNotBijective { b } => write!(f, "Q2 fails at column b={b}"),
            Violation::Distributivity { a, b, c } => write!(f, "Q3 fails at (a,b,c)=({a},{b},{c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FiniteQuandle {
    /// Builds a quandle from rows and re-checks the axioms.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let q = Self::from_rows_unchecked(name, rows)?;
        let report = q.check_axioms();
        if let Some(v) = report.violations.first() {
            return Err(QuandleError::Axioms(format!(
                "{} violation(s), first: {v}",
                report.violations.len()
            )));
        }
        Ok(q)
    }

    /// Builds a table without checking Q1-Q3 (only shape and range).
    pub fn from_rows_unchecked(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let size = rows.len();
        if size == 0 || size > MAX_ORDER {
            return Err(QuandleError::InvalidParameter(format!("order {size} out of range 1..={MAX_ORDER}")));
        }
        let mut table = Vec::with_capacity(size * size);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(QuandleError::Malformed(format!("row {a} has {} entries, expected {size}", row.len())));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(QuandleError::Malformed(format!("entry ({a},{b}) = {v} out of range")));
                }
                table.push(v as Elem);
            }
        }
        Ok(FiniteQuandle { name: name.into(), size, table })
    }

    /// The dihedral quandle `R_n`: `a^b = 2b - a mod n`.
    pub fn dihedral(n: usize) -> Result<Self, QuandleError> {
        if !(3..=MAX_ORDER).contains(&n) {
            return Err(QuandleError::InvalidParameter(format!("dihedral order must be in 3..={MAX_ORDER}, got {n}")));
        }
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect()).collect();
        Self::from_rows_unchecked(format!("R{n}"), &rows)
    }

    /// The octahedral quandle `O_6`, built from [`OctahedronModel`].
    pub fn octahedral() -> Self {
        let model = OctahedronModel::standard();
        let rows: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| model.rotate(a, b)).collect())
            .collect();
        Self::from_rows_unchecked("O6", &rows).expect("octahedron table is well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(|x| x as Elem)
    }

    /// `a^b`.
    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.size + b as usize]
    }

    /// `a^{b_1 b_2 ... b_k}`, applied left to right.
    pub fn act(&self, a: Elem, word: &[Elem]) -> Elem {
        word.iter().fold(a, |x, &b| self.op(x, b))
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        let s = a as usize * self.size;
        &self.table[s..s + self.size]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| self.row(a as Elem).iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// The column map `x -> x^b`.
    pub fn column(&self, b: Elem) -> InnerPerm {
        InnerPerm::from_images(self.elements().map(|x| self.op(x, b)).collect())
            .expect("columns of a checked quandle are bijections")
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.size
    }

    /// Exhaustive Q1-Q3 check.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size;
        let mut report = AxiomReport::default();
        for a in self.elements() {
            report.checked += 1;
            if self.op(a, a) != a {
                report.violations.push(Violation::Idempotence { a });
            }
        }
        for b in self.elements() {
            report.checked += 1;
            let mut seen = vec![false; n];
            for a in self.elements() {
                seen[self.op(a, b) as usize] = true;
            }
            if seen.iter().any(|s| !s) {
                report.violations.push(Violation::ColumnNotBijective { b });
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    report.checked += 1;
                    if self.op(self.op(a, b), c) != self.op(self.op(a, c), self.op(b, c)) {
                        report.violations.push(Violation::Distributivity { a, b, c });
                    }
                }
            }
        }
        report
    }

    /// The dual quandle: every column map inverted.
    pub fn dual(&self) -> Result<Self, QuandleError> {
        let n = self.size;
        let mut table = vec![Elem::MAX; n * n];
        for b in 0..n {
            for a in 0..n {
                let image = self.table[a * n + b] as usize;
                if table[image * n + b] != Elem::MAX {
                    return Err(QuandleError::Axioms(format!("column {b} is not a bijection")));
                }
                table[image * n + b] = a as Elem;
            }
        }
        let name = match self.name.strip_suffix("~") {
            Some(base) => base.to_string(),
            None => format!("{}~", self.name),
        };
        Ok(FiniteQuandle { name, size: n, table })
    }

    /// True iff `map(a^b) = map(a)^map(b)` in `target` for all `a, b`.
    pub fn is_homomorphism_to(&self, map: &[Elem], target: &FiniteQuandle) -> Result<bool, QuandleError> {
        if map.len() != self.size || target.size != self.size {
            return Err(QuandleError::InvalidParameter(format!(
                "size mismatch: map {} vs orders {} and {}",
                map.len(),
                self.size,
                target.size
            )));
        }
        if map.iter().any(|&x| x as usize >= self.size) {
            return Err(QuandleError::InvalidParameter("map has entries out of range".into()));
        }
        Ok(self.elements().all(|a| {
            self.elements()
                .all(|b| map[self.op(a, b) as usize] == target.op(map[a as usize], map[b as usize]))
        }))
    }

    /// Checks that `map` is a bijection and a homomorphism.
    pub fn is_isomorphism_to(&self, map: &[Elem], target: &FiniteQuandle) -> Result<bool, QuandleError> {
        InnerPerm::from_images(map.to_vec())?;
        self.is_homomorphism_to(map, target)
    }

    /// Cyclic group generated by the column map of `generator`, identity first.
    pub fn inner_subgroup(&self, generator: Elem) -> Result<Vec<InnerPerm>, QuandleError> {
        if generator as usize >= self.size {
            return Err(QuandleError::InvalidParameter(format!("generator {generator} out of range")));
        }
        let step = self.column(generator);
        let id = InnerPerm::identity(self.size);
        let mut out = vec![id.clone()];
        let mut cur = step.clone();
        while cur != id {
            out.push(cur.clone());
            cur = cur.then(&step);
        }
        Ok(out)
    }

    /// The group generated by all column maps.
    pub fn inner_group(&self) -> Vec<InnerPerm> {
        let gens: Vec<InnerPerm> = self.elements().map(|b| self.column(b)).collect();
        let id = InnerPerm::identity(self.size);
        let mut seen = std::collections::BTreeSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let next = p.then(g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// True iff every inner permutation is also a quandle automorphism
    /// (always the case; exposed for tests).
    pub fn is_automorphism(&self, p: &InnerPerm) -> bool {
        self.is_homomorphism_to(p.images(), self).unwrap_or(false)
    }

    /// `base^{a b c}` for every triple with `b` different from `a` and `c`.
    pub fn base_point_table(&self, base: Elem) -> Vec<((Elem, Elem, Elem), Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if b != a && b != c {
                        out.push(((a, b, c), self.act(base, &[a, b, c])));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteQuandle({}, order {})", self.name, self.size)
    }
}

impl fmt::Display for FiniteQuandle {
    /// The table file format: `n`, then one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size)?;
        for a in self.elements() {
            let row: Vec<String> = self.row(a).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the table file format and re-checks the axioms.
pub fn parse_table(name: &str, text: &str) -> Result<FiniteQuandle, QuandleError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| QuandleError::Malformed("empty file".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| QuandleError::Malformed(format!("bad order line {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for line in lines {
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        rows.push(row.map_err(|_| QuandleError::Malformed(format!("bad row {line:?}")))?);
    }
    if rows.len() != n {
        return Err(QuandleError::Malformed(format!("expected {n} rows, found {}", rows.len())));
    }
    FiniteQuandle::from_rows(name, &rows)
}
