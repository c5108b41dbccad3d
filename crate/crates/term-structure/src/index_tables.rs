use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use quandle_core::{is_octahedral, Elem, FiniteQuandle};

use crate::error::StructureError;
use crate::family::{catalogue, FamilyTemplate};

/// One row: a family, the normalized `b, c`, the admissible `u` and `d`
/// values sharing the same grouping of terms by terminal index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPatternRow {
    pub number: usize,
    pub family: String,
    /// Group sizes, largest first.
    pub shape: Vec<usize>,
    pub us: Vec<Elem>,
    pub b: Elem,
    pub c: Elem,
    /// `None` for families without a fourth symbol.
    pub ds: Option<Vec<Elem>>,
    /// Term labels per group of size at least two, in term order.
    pub groups: Vec<Vec<String>>,
}

impl IndexPatternRow {
    pub fn shape_label(&self) -> String {
        self.shape.iter().join("+")
    }
}

fn list(xs: &[Elem], n: usize) -> String {
    if xs.len() == n {
        "any".to_string()
    } else {
        xs.iter().join(",")
    }
}

impl fmt::Display for IndexPatternRow {
    /// `no shape case u b c d | result`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = self.family.split_once('-').map_or(self.family.as_str(), |(_, c)| c);
        let d = self.ds.as_ref().map_or("-".to_string(), |ds| ds.iter().join(","));
        let size: usize = self.shape.iter().sum();
        let result = if self.shape == [size] {
            "all".to_string()
        } else {
            self.groups.iter().map(|g| g.join("=")).join(", ")
        };
        write!(
            f,
            "{} {} {case} {} {} {} {d} | {result}",
            self.number,
            self.shape_label(),
            list(&self.us, 6),
            self.b,
            self.c
        )
    }
}

/// Shapes reported for each family size, in table order.
pub fn reported_shapes(k: usize) -> Vec<Vec<usize>> {
    match k {
        4 => vec![vec![2, 2], vec![3, 1], vec![4]],
        5 => vec![vec![3, 2], vec![4, 1], vec![5]],
        _ => Vec::new(),
    }
}

struct Instance {
    shape: Vec<usize>,
    /// Term positions grouped by terminal index, groups ordered by first term.
    partition: Vec<Vec<usize>>,
    /// Labels of each term; a bigon has both words.
    labels: Vec<Vec<String>>,
    /// Both words of every bigon reach the same terminal index.
    consistent: bool,
}

fn evaluate(t: &FamilyTemplate, q: &FiniteQuandle, values: &[Elem], u: Elem) -> Instance {
    let mut term_values = Vec::new();
    let mut labels = Vec::new();
    let mut consistent = true;
    for st in &t.terms {
        let cols = st.colors.map(|s| values[s as usize]);
        let v = q.act(u, &cols);
        let mut names = vec![st.label()];
        if st.is_bigon() {
            let other = [st.colors[1], st.colors[0], st.colors[1]];
            let flipped = other.map(|s| values[s as usize]);
            consistent &= q.act(u, &flipped) == v;
            names.push(crate::family::SymbolicTerm::new(st.sign, other).label());
        }
        term_values.push(v);
        labels.push(names);
    }
    let mut partition: Vec<(Elem, Vec<usize>)> = Vec::new();
    for (i, v) in term_values.iter().enumerate() {
        match partition.iter_mut().find(|(w, _)| w == v) {
            Some((_, g)) => g.push(i),
            None => partition.push((*v, vec![i])),
        }
    }
    let partition: Vec<Vec<usize>> = partition.into_iter().map(|(_, g)| g).collect();
    let mut shape: Vec<usize> = partition.iter().map(Vec::len).collect();
    shape.sort_unstable_by(|a, b| b.cmp(a));
    Instance { shape, partition, labels, consistent }
}

/// Regenerates the grouping tables for the size-`k` catalogue families over
/// `O_6`, with `a = 0` and `(b, c)` normalized to `(1, c)` or `(3, 1)`.
pub fn index_pattern_tables(q: &FiniteQuandle, k: usize) -> Result<Vec<IndexPatternRow>, StructureError> {
    if !is_octahedral(q) {
        return Err(StructureError::InvalidParameter("index tables are defined over O6".into()));
    }
    if k != 4 && k != 5 {
        return Err(StructureError::InvalidParameter(format!("index tables cover sizes 4 and 5, not {k}")));
    }
    let shapes = reported_shapes(k);
    let normal_bc: Vec<(Elem, Elem)> = (2..6).map(|c| (1, c)).chain([(3, 1)]).collect();
    let mut rows = Vec::new();
    for (order, t) in catalogue().into_iter().filter(|t| t.size() == k).enumerate() {
        let has_d = t.symbols == 4;
        for &(b, c) in &normal_bc {
            let ds: Vec<Option<Elem>> = if has_d {
                (0..6).filter(|&d| t.admits(&[0, b, c, d])).map(Some).collect()
            } else {
                vec![None]
            };
            // (partition) -> d -> us
            let mut groups: BTreeMap<Vec<Vec<usize>>, (Instance, BTreeMap<Option<Elem>, Vec<Elem>>)> = BTreeMap::new();
            for &d in &ds {
                let values: Vec<Elem> = [0, b, c].into_iter().chain(d).collect();
                for u in q.elements() {
                    let inst = evaluate(&t, q, &values, u);
                    if !shapes.contains(&inst.shape) {
                        continue;
                    }
                    if !inst.consistent {
                        return Err(StructureError::Unsupported(format!(
                            "{} at b={b} c={c} u={u}: the two bigon words disagree",
                            t.id
                        )));
                    }
                    let entry = groups.entry(inst.partition.clone()).or_insert_with(|| (inst, BTreeMap::new()));
                    entry.1.entry(d).or_default().push(u);
                }
            }
            for (_, (inst, by_d)) in groups {
                // d values with identical u sets share a row
                let mut rects: BTreeMap<Vec<Elem>, Vec<Option<Elem>>> = BTreeMap::new();
                for (d, us) in by_d {
                    rects.entry(us).or_default().push(d);
                }
                for (us, dset) in rects {
                    let ds = if has_d { Some(dset.iter().flatten().copied().collect::<Vec<_>>()) } else { None };
                    let groups = inst
                        .partition
                        .iter()
                        .filter(|g| g.len() >= 2)
                        .map(|g| g.iter().flat_map(|&i| inst.labels[i].clone()).collect())
                        .collect();
                    rows.push((order, inst.shape.clone(), IndexPatternRow {
                        number: 0,
                        family: t.id.clone(),
                        shape: inst.shape.clone(),
                        us,
                        b,
                        c,
                        ds,
                        groups,
                    }));
                }
            }
        }
    }
    rows.sort_by_key(|(order, shape, r)| {
        let shape_rank = shapes.iter().position(|s| s == shape).unwrap_or(usize::MAX);
        let min_d = r.ds.as_ref().and_then(|d| d.first().copied());
        (shape_rank, *order, r.b, r.c, min_d, r.us.first().copied())
    });
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(i, (_, _, mut r))| {
            r.number = i + 1;
            r
        })
        .collect())
}
