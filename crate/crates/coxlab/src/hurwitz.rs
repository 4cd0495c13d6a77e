//! Reduced reflection factorizations of a Coxeter element, the Hurwitz braid
//! action on them, and the dual presentation they carry.

use std::collections::{HashMap, HashSet, VecDeque};

use serde_json::json;

use crate::group::GroupTable;
use crate::{Error, Result};

/// A factorization is the sequence of its terms as group-element ids; the
/// left-to-right product is the fixed Coxeter element.
pub type Factorization = Vec<usize>;

/// All reduced reflection factorizations of c, by DFS with length pruning:
/// a prefix p stays viable only while l(p⁻¹c) keeps dropping by one.
pub fn enumerate_factorizations(gt: &GroupTable, c: usize) -> Vec<Factorization> {
    let n = gt.length(c);
    let refls = &gt.refl;
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn dfs(
        gt: &GroupTable,
        refls: &[usize],
        rem: usize,
        word: &mut Vec<usize>,
        out: &mut Vec<Factorization>,
    ) {
        let lr = gt.length(rem);
        if lr == 0 {
            out.push(word.clone());
            return;
        }
        for &t in refls {
            let next = gt.mul(t, rem);
            if gt.length(next) + 1 == lr {
                word.push(t);
                dfs(gt, refls, next, word, out);
                word.pop();
            }
        }
    }
    dfs(gt, refls, c, &mut word, &mut out);
    out
}

/// One Hurwitz move at position i (0-based): the positive move replaces
/// (t_i, t_{i+1}) by (t_i t_{i+1} t_i⁻¹, t_i); the negative move inverts it.
pub fn hurwitz_move(gt: &GroupTable, f: &Factorization, i: usize, positive: bool) -> Factorization {
    let mut g = f.clone();
    let (a, b) = (f[i], f[i + 1]);
    if positive {
        g[i] = gt.mul(gt.mul(a, b), gt.inv(a));
        g[i + 1] = a;
    } else {
        g[i] = b;
        g[i + 1] = gt.mul(gt.mul(gt.inv(b), a), b);
    }
    g
}

/// Orbit partition of the factorization set under all Hurwitz moves; returns
/// sorted index sets into `fs`.
pub fn hurwitz_orbits(gt: &GroupTable, fs: &[Factorization]) -> Vec<Vec<usize>> {
    let index: HashMap<&Factorization, usize> = fs.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let n = fs.first().map_or(0, Vec::len);
    let mut seen = vec![false; fs.len()];
    let mut orbits = Vec::new();
    for start in 0..fs.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for i in 0..n.saturating_sub(1) {
                for positive in [true, false] {
                    let g = hurwitz_move(gt, &fs[u], i, positive);
                    let v = *index.get(&g).expect("move left the factorization set");
                    if !seen[v] {
                        seen[v] = true;
                        orbit.push(v);
                        queue.push_back(v);
                    }
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Orbit sizes under simultaneous term-wise conjugation by c. Every orbit
/// must have size h or h/2; when c^{h/2} is the central -1 all orbits must
/// close up already at h/2.
pub fn c_conjugation_orbits(
    gt: &GroupTable,
    fs: &[Factorization],
    c: usize,
    h: usize,
) -> Result<Vec<usize>> {
    let index: HashMap<&Factorization, usize> = fs.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let ci = gt.inv(c);
    let conj = |f: &Factorization| -> Factorization {
        f.iter().map(|&t| gt.mul(gt.mul(c, t), ci)).collect()
    };
    let minus_one_case = h % 2 == 0 && {
        let mut p = gt.id();
        for _ in 0..h / 2 {
            p = gt.mul(p, c);
        }
        gt.elements[p].is_minus_identity()
    };
    let mut seen = vec![false; fs.len()];
    let mut sizes = Vec::new();
    for start in 0..fs.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut cur = fs[start].clone();
        loop {
            let id = *index.get(&cur).expect("conjugation left the set");
            if seen[id] {
                break;
            }
            seen[id] = true;
            size += 1;
            cur = conj(&cur);
        }
        let ok = size == h || (h % 2 == 0 && size == h / 2);
        if !ok || (minus_one_case && size != h / 2) {
            return Err(Error::PropertyViolation(format!(
                "c-conjugation orbit of size {size} with h = {h}"
            )));
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// The dual presentation: one generator per reflection, all factorization
/// words declared equal.
pub struct DualPresentation {
    /// (generator name, positive root index), in root order.
    pub generators: Vec<(String, usize)>,
    /// Words as sequences of root indices.
    pub words: Vec<Vec<usize>>,
}

pub fn export_dual_presentation(gt: &GroupTable, fs: &[Factorization]) -> DualPresentation {
    let root_of: HashMap<usize, usize> = gt
        .refl
        .iter()
        .enumerate()
        .map(|(root, &elem)| (elem, root))
        .collect();
    let used: HashSet<usize> = fs.iter().flatten().map(|t| root_of[t]).collect();
    let mut roots: Vec<usize> = used.into_iter().collect();
    roots.sort_unstable();
    let generators = roots.iter().map(|&r| (format!("t{r}"), r)).collect();
    let mut words: Vec<Vec<usize>> = fs
        .iter()
        .map(|f| f.iter().map(|t| root_of[t]).collect())
        .collect();
    words.sort();
    DualPresentation { generators, words }
}

impl DualPresentation {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, root) in &self.generators {
            out.push_str(&format!("gen {name} = reflection {root}\n"));
        }
        for w in &self.words {
            let parts: Vec<String> = w.iter().map(|r| format!("t{r}")).collect();
            out.push_str(&parts.join("."));
            out.push('\n');
        }
        out.push_str(&format!("words: {}\n", self.words.len()));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "generators": self.generators.iter().map(|(name, root)| {
                json!({"name": name, "reflection": root})
            }).collect::<Vec<_>>(),
            "words": self.words.iter().map(|w| {
                w.iter().map(|r| format!("t{r}")).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "words_count": self.words.len(),
        })
    }
}
