use chain_algebra::{f_faces, g_faces, GradedTerm};
use quandle_core::{Elem, FiniteQuandle};
use smallvec::SmallVec;

pub(crate) const NONE: u32 = u32::MAX;

/// Every arity-3 term over degrees `0..levels` with dense ids that follow the
/// term ordering, plus the face incidence in both directions.
pub(crate) struct TermSpace {
    pub n: usize,
    pub levels: usize,
    pub terms: Vec<GradedTerm>,
    pub colors: Vec<[Elem; 3]>,
    pub level: Vec<u8>,
    /// Merged `(face, contribution)` pairs of `∂t`.
    pub faces: Vec<SmallVec<[(u32, i8); 6]>>,
    pub face_level: Vec<u8>,
    /// `(term, contribution)` for every term whose boundary meets the face.
    pub cancellers: Vec<Vec<(u32, i8)>>,
    id_of: Vec<u32>,
}

impl TermSpace {
    pub fn new(q: &FiniteQuandle, levels: usize) -> Self {
        let n = q.size();
        let mut terms = Vec::new();
        let mut colors = Vec::new();
        let mut level = Vec::new();
        let mut id_of = vec![NONE; levels * n * n * n * n];
        for d in 0..levels {
            for u in 0..n as Elem {
                for a in 0..n as Elem {
                    for b in (0..n as Elem).filter(|&b| b != a) {
                        for c in (0..n as Elem).filter(|&c| c != b) {
                            let key = (((d * n + u as usize) * n + a as usize) * n + b as usize) * n + c as usize;
                            id_of[key] = terms.len() as u32;
                            terms.push(GradedTerm::new_unchecked(d as i32, u, &[a, b, c]));
                            colors.push([a, b, c]);
                            level.push(d as u8);
                        }
                    }
                }
            }
        }
        let face_count = (levels + 1) * n * n * n;
        let face_level = (0..face_count).map(|i| (i / (n * n * n)) as u8).collect();
        let face_id = |t: &GradedTerm| -> u32 {
            let (x, y) = (t.colors[0] as usize, t.colors[1] as usize);
            (((t.degree as usize * n + t.index as usize) * n + x) * n + y) as u32
        };
        let mut faces = Vec::with_capacity(terms.len());
        let mut cancellers = vec![Vec::new(); face_count];
        for (id, t) in terms.iter().enumerate() {
            let mut merged: SmallVec<[(u32, i8); 6]> = SmallVec::new();
            for (face, s) in f_faces(t).chain(g_faces(t, q, true)) {
                let fid = face_id(&face);
                match merged.iter_mut().find(|(f, _)| *f == fid) {
                    Some(slot) => slot.1 += s as i8,
                    None => merged.push((fid, s as i8)),
                }
            }
            merged.retain(|(_, s)| *s != 0);
            merged.sort_unstable();
            for &(f, s) in &merged {
                cancellers[f as usize].push((id as u32, s));
            }
            faces.push(merged);
        }
        TermSpace { n, levels, terms, colors, level, faces, face_level, cancellers, id_of }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn face_count(&self) -> usize {
        self.cancellers.len()
    }

    pub fn id(&self, degree: usize, index: Elem, cols: [Elem; 3]) -> u32 {
        let n = self.n;
        if degree >= self.levels {
            return NONE;
        }
        let key = (((degree * n + index as usize) * n + cols[0] as usize) * n + cols[1] as usize) * n + cols[2] as usize;
        self.id_of[key]
    }
}
