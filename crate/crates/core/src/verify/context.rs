//! Shared, lazily computed objects for checks: groups, line families, lifts.
//!
//! Everything here is a cache. A check that runs alone recomputes what it needs.

use std::any::Any;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::catalog::Catalog;
use crate::cyclo::{lcm_u32, CycNum};
use crate::error::{Error, Result};
use crate::group::{MatrixGroup, Mode};
use crate::linalg::{Mat, Vector};
use crate::projgeom::{fixed_lines_of_involution, ProjLine, ProjPoint};

pub const DEFAULT_SEED: u64 = 20_240_517;

type Slot = Arc<OnceLock<Result<Arc<dyn Any + Send + Sync>>>>;

pub struct Context {
    catalog: Catalog,
    step_budget: usize,
    seed: u64,
    memo: Mutex<HashMap<String, Slot>>,
}

/// A linear group, its projective image and a lift for every projective element.
pub struct Lifted {
    pub linear: MatrixGroup,
    pub projective: MatrixGroup,
    pub lift: Vec<usize>,
}

impl Lifted {
    pub fn lift_matrix(&self, k: usize) -> &Mat {
        self.linear.element(self.lift[k]).matrix()
    }
}

impl Context {
    pub fn new(catalog: Catalog) -> Context {
        Context {
            catalog,
            step_budget: crate::ideals::DEFAULT_STEP_BUDGET,
            seed: DEFAULT_SEED,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_step_budget(mut self, budget: usize) -> Context {
        self.step_budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Context {
        self.seed = seed;
        self
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Computes `f` once per key. A computation must not request its own key.
    pub fn memo<T: Any + Send + Sync>(&self, key: &str, f: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
        let slot = {
            let mut m = self.memo.lock().expect("memo lock");
            m.entry(key.to_string()).or_default().clone()
        };
        let v = slot
            .get_or_init(|| f().map(|t| Arc::new(t) as Arc<dyn Any + Send + Sync>))
            .clone()?;
        v.downcast::<T>()
            .map_err(|_| Error::Internal(format!("memo entry {key} has an unexpected type")))
    }

    pub fn group(&self, key: &str, mode: Mode) -> Result<Arc<MatrixGroup>> {
        self.memo(&format!("group/{key}/{mode}"), || {
            if mode == Mode::Projective {
                Ok(self.group(key, Mode::Linear)?.projective_image())
            } else {
                self.catalog.group(key, mode)
            }
        })
    }

    /// Linear group with lifts of its projective elements.
    pub fn lifted(&self, key: &str) -> Result<Arc<Lifted>> {
        self.memo(&format!("lifted/{key}"), || {
            let linear = (*self.group(key, Mode::Linear)?).clone();
            let projective = (*self.group(key, Mode::Projective)?).clone();
            let mut lift = vec![usize::MAX; projective.order()];
            for (k, e) in linear.elements().iter().enumerate() {
                let p = projective
                    .index_of(&e.with_mode(Mode::Projective))
                    .ok_or_else(|| Error::Internal("projective image misses an element".into()))?;
                if lift[p] == usize::MAX {
                    lift[p] = k;
                }
            }
            Ok(Lifted { linear, projective, lift })
        })
    }

    /// The thirty lines of the line table, labelled by their table rows:
    /// row k of each family is T^(k-1) applied to the family's seed.
    pub fn lines30(&self) -> Result<Arc<Vec<(String, ProjLine)>>> {
        self.memo("lines30", || {
            let t = self.catalog.matrix("T")?;
            let labels = self.catalog.table("Table1")?.rows.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>();
            let seeds = ["ell", "ell-check", "ell-prime", "ell-check-prime", "ell-dprime", "ell-check-dprime"];
            let mut out = Vec::new();
            for s in seeds {
                let (mut line, _) = self.catalog.line(s)?;
                for _ in 0..5 {
                    out.push(line.clone());
                    line = line.apply(&t)?;
                }
            }
            if labels.len() != out.len() {
                return Err(Error::Internal("line table row count differs from the seed families".into()));
            }
            Ok(labels.into_iter().zip(out).collect())
        })
    }

    /// The fixed-line pairs of the fifteen involutions of the Heisenberg image.
    pub fn involution_lines(&self) -> Result<Arc<Vec<(ProjLine, ProjLine)>>> {
        self.memo("involution-lines", || {
            let hbar = self.group("H", Mode::Projective)?;
            hbar.elements()
                .iter()
                .filter(|e| !e.is_identity() && !e.is_scalar())
                .map(fixed_lines_of_involution)
                .collect()
        })
    }
}

fn unify_field(mats: &[Mat]) -> Result<u32> {
    Ok(mats.iter().fold(1, |n, m| lcm_u32(n, m.field_index())))
}

/// Basis of the intersection of two subspaces given by row bases.
fn intersect(a: &[Vector], b: &[Vector]) -> Result<Vec<Vector>> {
    let mut cols: Vec<Vector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|c| -c).collect::<Vector>()));
    let m = Mat::from_rows(cols)?.transpose();
    let ker = m.kernel_basis();
    let mut out: Vec<Vector> = Vec::new();
    for k in ker {
        let v: Vector = (0..a[0].len())
            .map(|c| {
                let mut acc = CycNum::zero(k[0].field_index());
                for (r, row) in a.iter().enumerate() {
                    acc = &acc + &(&k[r] * &row[c]);
                }
                acc
            })
            .collect();
        out.push(v);
    }
    if out.is_empty() {
        return Ok(out);
    }
    // drop dependent vectors
    let e = Mat::from_rows(out)?.rref();
    Ok(e.matrix.row_vecs().into_iter().take(e.rank).collect())
}

/// Common eigenspaces of finite-order matrices (linear lifts), i.e. the
/// subspaces whose projectivisations are fixed pointwise by all of them.
pub fn common_eigenspaces(mats: &[Mat]) -> Result<Vec<Vec<Vector>>> {
    let mut n = unify_field(mats)?;
    let mut eig = Vec::new();
    for m in mats {
        let o = crate::group::element_order(m, Mode::Linear)?;
        let e = m.eigen_lines(o)?;
        n = lcm_u32(n, e[0].0.field_index());
        eig.push(e);
    }
    let embed = |v: &Vector| v.iter().map(|c| c.embed(n)).collect::<Result<Vector>>();
    let mut spaces: Vec<Vec<Vector>> = vec![Mat::identity(4, n).row_vecs()];
    for e in eig {
        let mut next = Vec::new();
        for s in &spaces {
            for (_, basis) in &e {
                let b = basis.iter().map(embed).collect::<Result<Vec<_>>>()?;
                let i = intersect(s, &b)?;
                if !i.is_empty() {
                    next.push(i);
                }
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

/// Isolated common fixed points, and the number of positive-dimensional fixed loci.
pub fn common_fixed_points(mats: &[Mat]) -> Result<(Vec<ProjPoint>, usize)> {
    let spaces = common_eigenspaces(mats)?;
    let mut points = Vec::new();
    let mut higher = 0;
    for s in spaces {
        if s.len() == 1 {
            points.push(ProjPoint::new(s[0].clone())?);
        } else {
            higher += 1;
        }
    }
    Ok((points, higher))
}
