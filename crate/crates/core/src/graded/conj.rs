use crate::error::{Error, Result};
use crate::ideal::AdditiveSpan;
use crate::ring::{Elem, ElementView, FiniteRing, PowerBehaviour, RingAutomorphism};

/// `φ(A) = z⁻¹ · σ(A) · z` with `σ` a field automorphism applied entrywise.
#[derive(Clone, Debug)]
pub struct AutoDecomposition {
    pub n: usize,
    pub field: FiniteRing,
    pub matrix: FiniteRing,
    pub sigma: RingAutomorphism,
    pub z: Elem,
    pub z_inv: Elem,
}

impl AutoDecomposition {
    /// `σ` acting entrywise on the matrix ring.
    pub fn entrywise(&self) -> Result<RingAutomorphism> {
        RingAutomorphism::coefficientwise(&self.matrix, &self.sigma)
    }

    /// `A ↦ z⁻¹ σ(A) z`.
    pub fn recompose(&self) -> Result<RingAutomorphism> {
        RingAutomorphism::conjugation(&self.matrix, self.z)?.compose(&self.entrywise()?)
    }
}

fn rows(m: &FiniteRing, x: Elem) -> Vec<Vec<Elem>> {
    match m.view(x) {
        ElementView::Matrix(r) => r,
        v => unreachable!("matrix ring produced {v:?}"),
    }
}

/// Matrix units `e_ij` followed by the scalar matrix of a primitive element.
fn test_matrices(m: &FiniteRing, n: usize, f: &FiniteRing) -> Result<Vec<Elem>> {
    let mut out = Vec::with_capacity(n * n + 1);
    for i in 0..n {
        for j in 0..n {
            let mut r = vec![vec![f.zero(); n]; n];
            r[i][j] = f.one();
            out.push(m.from_view(&ElementView::Matrix(r))?);
        }
    }
    let q = f.size();
    let a = f
        .elements()
        .find(|&a| f.power_behaviour(a) == PowerBehaviour::Unit { order: q - 1 })
        .ok_or_else(|| Error::inconsistent("field without a primitive element"))?;
    let mut r = vec![vec![f.zero(); n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = a;
    }
    out.push(m.from_view(&ElementView::Matrix(r))?);
    Ok(out)
}

/// Basis of `{v : rows·v = 0}` over the field `f`, each vector scaled so its
/// last pivot-free coordinate is 1.
fn nullspace(f: &FiniteRing, mut rows: Vec<Vec<Elem>>, cols: usize) -> Vec<Vec<Elem>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != f.zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.unit_inverse(rows[r][c]).expect("nonzero field element");
        for x in rows[r].iter_mut() {
            *x = f.mul(inv, *x);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != f.zero() {
                let k = rows[i][c];
                for j in 0..cols {
                    let t = f.mul(k, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(rows[i][free]);
            }
            v
        })
        .collect()
}

/// Solutions `Z` of `Z·φ(A) = σ(A)·Z` on the test matrices.
fn intertwiners(
    phi: &RingAutomorphism,
    entrywise: &RingAutomorphism,
    tests: &[Elem],
    n: usize,
    f: &FiniteRing,
) -> Vec<Vec<Elem>> {
    let m = phi.domain();
    let var = |r: usize, k: usize| r * n + k;
    let mut eqs = Vec::new();
    for &a in tests {
        let b = rows(m, phi.apply(a));
        let c = rows(m, entrywise.apply(a));
        for r in 0..n {
            for col in 0..n {
                let mut eq = vec![f.zero(); n * n];
                for k in 0..n {
                    eq[var(r, k)] = f.add(eq[var(r, k)], b[k][col]);
                    eq[var(k, col)] = f.sub(eq[var(k, col)], c[r][k]);
                }
                eqs.push(eq);
            }
        }
    }
    nullspace(f, eqs, n * n)
}

/// Writes an automorphism of `Mat(n, F)` as conjugation after an entrywise
/// field automorphism. Candidates are scanned in order `frob^0, frob^1, …`
/// and exactly one must admit an invertible solution.
pub fn decompose_matrix_automorphism(phi: &RingAutomorphism) -> Result<AutoDecomposition> {
    let m = phi.domain();
    let (n, f) = m
        .matrix_parts()
        .ok_or_else(|| Error::precondition(format!("{} is not a matrix ring", m.label())))?;
    if f.field_parameters().is_none() {
        return Err(Error::precondition(format!("{} is not a field", f.label())));
    }
    let tests = test_matrices(m, n, f)?;
    let mut accepted: Vec<AutoDecomposition> = Vec::new();
    for sigma in RingAutomorphism::field_automorphisms(f)? {
        let entrywise = RingAutomorphism::coefficientwise(m, &sigma)?;
        let z = intertwiners(phi, &entrywise, &tests, n, f)
            .into_iter()
            .map(|v| {
                let r: Vec<Vec<Elem>> = v.chunks(n).map(<[Elem]>::to_vec).collect();
                m.from_view(&ElementView::Matrix(r))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find_map(|z| m.unit_inverse(z).map(|zi| (z, zi)));
        if let Some((z, z_inv)) = z {
            accepted.push(AutoDecomposition {
                n,
                field: f.clone(),
                matrix: m.clone(),
                sigma,
                z,
                z_inv,
            });
        }
    }
    if accepted.len() > 1 {
        return Err(Error::inconsistent(format!(
            "{} field automorphisms decompose {}",
            accepted.len(),
            phi.describe()
        )));
    }
    let d = accepted
        .pop()
        .ok_or_else(|| Error::inconsistent(format!("no decomposition of {}", phi.describe())))?;
    let re = d.recompose()?;
    if let Some(&a) = tests.iter().find(|&&a| re.apply(a) != phi.apply(a)) {
        return Err(Error::inconsistent(format!(
            "recomposition differs from {} at {}",
            phi.describe(),
            m.render(a)
        )));
    }
    Ok(d)
}

/// Isomorphism `Mat(n,F)[t;φ]/(t²) → Mat(n, F[x;σ]/(x²))` given by
/// `A₀ + A₁t ↦ A₀ + A₁·z⁻¹·x`.
#[derive(Clone, Debug)]
pub struct SkewMatrixIso {
    pub decomposition: AutoDecomposition,
    pub source: FiniteRing,
    pub target: FiniteRing,
    inner: FiniteRing,
    x: Elem,
}

impl SkewMatrixIso {
    fn embed(&self, a: Elem) -> Result<Elem> {
        let r = rows(&self.decomposition.matrix, a)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| self.inner.from_view(&ElementView::Skew(vec![c, 0])))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        self.target.from_view(&ElementView::Matrix(r))
    }

    pub fn apply(&self, s: Elem) -> Result<Elem> {
        let ElementView::Skew(c) = self.source.view(s) else {
            unreachable!("skew ring produced another view")
        };
        let t = &self.target;
        let a0 = self.embed(c[0])?;
        let a1 = self.embed(c[1])?;
        let zi = self.embed(self.decomposition.z_inv)?;
        Ok(t.add(a0, t.mul(t.mul(a1, zi), self.x)))
    }

    /// Unit, additivity and multiplicativity on an additive basis, and
    /// injectivity through the size of the image span.
    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if s.size() != t.size() {
            return Err(Error::inconsistent("source and target differ in size"));
        }
        if self.apply(s.one())? != t.one() {
            return Err(Error::inconsistent("identity not preserved"));
        }
        let gens = s.additive_generators();
        let images = gens
            .iter()
            .map(|&g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        for (i, &g) in gens.iter().enumerate() {
            for (j, &h) in gens.iter().enumerate() {
                if self.apply(s.add(g, h))? != t.add(images[i], images[j]) {
                    return Err(Error::inconsistent(format!(
                        "not additive on {} and {}",
                        s.render(g),
                        s.render(h)
                    )));
                }
                if self.apply(s.mul(g, h))? != t.mul(images[i], images[j]) {
                    return Err(Error::inconsistent(format!(
                        "not multiplicative on {} and {}",
                        s.render(g),
                        s.render(h)
                    )));
                }
            }
        }
        if AdditiveSpan::of(t, images)?.len() as u64 != s.size() {
            return Err(Error::inconsistent("map is not injective"));
        }
        Ok(())
    }
}

/// Builds and verifies the isomorphism for an automorphism `φ` of `Mat(n,F)`.
pub fn skew_matrix_iso(phi: &RingAutomorphism) -> Result<SkewMatrixIso> {
    let decomposition = decompose_matrix_automorphism(phi)?;
    let source = FiniteRing::skew_truncated(phi.domain().clone(), phi.clone(), 2)?;
    let inner =
        FiniteRing::skew_truncated(decomposition.field.clone(), decomposition.sigma.clone(), 2)?;
    let n = decomposition.n;
    let target = FiniteRing::matrix(n, inner.clone())?;
    let xi = inner.from_view(&ElementView::Skew(vec![0, 1]))?;
    let mut r = vec![vec![inner.zero(); n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = xi;
    }
    let x = target.from_view(&ElementView::Matrix(r))?;
    let iso = SkewMatrixIso {
        decomposition,
        source,
        target,
        inner,
        x,
    };
    iso.verify()?;
    Ok(iso)
}
