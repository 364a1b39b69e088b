use crate::error::{Error, Result};
use crate::extension::{is_quotient_algebra, Extension, QuotientOptions};
use crate::ideals::{is_semiprime, minimal_essential_ideal, Certificate, Strategy, DEFAULT_SEED};
use crate::leibniz::{Ideal, LeibnizAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::maximal::pder::{restricted_right, PartialDerivation, PderSpace};
use crate::scalar::Scalar;

/// Inputs to [`build_qmax`].
#[derive(Clone, Debug)]
pub struct QmaxOptions {
    pub seed: u64,
    /// Accept `L` as semiprime without a certificate.
    pub assume_semiprime: bool,
}

impl Default for QmaxOptions {
    fn default() -> Self {
        QmaxOptions {
            seed: DEFAULT_SEED,
            assume_semiprime: false,
        }
    }
}

/// `Q_m(L) = PDer(E, L)` for the minimal essential ideal `E`, with bracket
/// `[δ, μ] = μ∘δ − δ∘μ` and the embedding `φ(x) = R_x|_E`.
#[derive(Clone, Debug)]
pub struct MaximalQuotients {
    base: LeibnizAlgebra,
    essential: Ideal,
    pder: PderSpace,
    /// Each basis derivation as an endomorphism of `E` in `E`-coordinates.
    inner: Vec<Matrix>,
    algebra: LeibnizAlgebra,
    phi: Matrix,
}

fn fault(msg: impl Into<String>) -> Error {
    Error::InternalFault(msg.into())
}

/// Columns of an `L`-valued map on `E`, rewritten in `E`-coordinates.
fn into_essential(essential: &Subspace, map: &Matrix) -> Result<Matrix> {
    let cols = map
        .columns()
        .iter()
        .map(|c| essential.coords(c).ok_or_else(|| fault("a partial derivation leaves E")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(map.field(), essential.dim(), &cols))
}

/// Builds `Q_m(L)`; rejects `L` unless semiprimeness is certified or assumed.
pub fn build_qmax(alg: &LeibnizAlgebra, opts: &QmaxOptions) -> Result<MaximalQuotients> {
    let cert = is_semiprime(alg, Strategy::Auto, opts.seed)?;
    let cert = if cert.is_certified_true() || (opts.assume_semiprime && cert.verdict) {
        cert
    } else if opts.assume_semiprime && !cert.is_certified_false() {
        Certificate::unrefuted(opts.seed).with_note("semiprimeness assumed")
    } else {
        return Err(Error::NotSemiprime(format!(
            "{} is not certified semiprime{}",
            alg.name(),
            if cert.is_certified_false() { "" } else { "; pass the override to assume it" }
        )));
    };
    let socle = minimal_essential_ideal(alg, &cert, opts.seed)?;
    MaximalQuotients::over(alg, socle.ideal)
}

impl MaximalQuotients {
    /// The construction on a given minimal essential ideal `E`.
    pub fn over(alg: &LeibnizAlgebra, essential: Ideal) -> Result<MaximalQuotients> {
        let f = alg.field();
        let e = essential.space().clone();
        if essential.is_zero() || e.ambient() != alg.dim() {
            return Err(Error::Degenerate("E must be a nonzero ideal of L".into()));
        }
        let pder = PderSpace::solve(alg, &essential)?;
        let inner = pder
            .basis()
            .iter()
            .map(|d| into_essential(&e, &d.matrix))
            .collect::<Result<Vec<_>>>()?;
        let d = pder.dim();
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let bracket = compose_bracket(&pder.basis()[i].matrix, &inner[i], &pder.basis()[j].matrix, &inner[j]);
                let c = pder
                    .coords(&bracket)
                    .ok_or_else(|| fault("bracket of partial derivations is not a partial derivation"))?;
                products.push(c);
            }
        }
        let algebra = LeibnizAlgebra::from_products(format!("Qm({})", alg.name()), f, d, products);
        if !algebra.is_right_leibniz() {
            return Err(fault("Q_m(L) fails the right Leibniz identity"));
        }
        let phi_cols = (0..alg.dim())
            .map(|j| {
                pder.coords(&restricted_right(alg, &e, &alg.unit(j)))
                    .ok_or_else(|| fault("R_x restricted to E is not a partial derivation"))
            })
            .collect::<Result<Vec<_>>>()?;
        let phi = Matrix::from_columns(f, d, &phi_cols);
        if phi.rank() != alg.dim() {
            return Err(fault("phi is not injective"));
        }
        let m = MaximalQuotients {
            base: alg.clone(),
            essential,
            pder,
            inner,
            algebra,
            phi,
        };
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = m.phi.apply(alg.basis_product(i, j));
                let rhs = m.algebra.bracket(&m.phi.column(i), &m.phi.column(j));
                if lhs != rhs {
                    return Err(fault("phi is not a homomorphism"));
                }
            }
        }
        Ok(m)
    }

    pub fn base(&self) -> &LeibnizAlgebra {
        &self.base
    }

    pub fn essential(&self) -> &Ideal {
        &self.essential
    }

    pub fn space(&self) -> &[PartialDerivation] {
        self.pder.basis()
    }

    pub fn pder(&self) -> &PderSpace {
        &self.pder
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Columns are `φ(b_j)` in the basis of `Q_m(L)`.
    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    /// `φ(L)` as a subspace of `Q_m(L)`.
    pub fn phi_image(&self) -> Subspace {
        Subspace::from_vectors(self.base.field(), self.dim(), self.phi.columns())
    }

    /// `φ(L) ⊆ Q_m(L)` as an extension.
    pub fn extension(&self) -> Result<Extension> {
        Extension::new(self.algebra.clone(), self.phi_image())
    }

    /// The map `E → L` of the element with the given coordinates.
    pub fn map_of(&self, coords: &[Scalar]) -> Matrix {
        self.pder.combination(coords)
    }

    /// Coordinates of a map `E → L`, if it is a partial derivation.
    pub fn coords_of(&self, map: &Matrix) -> Option<Vec<Scalar>> {
        self.pder.coords(map)
    }

    /// `[δ, μ] = μ∘δ − δ∘μ` on maps `E → L` that preserve `E`.
    pub fn bracket_maps(&self, delta: &Matrix, mu: &Matrix) -> Result<Matrix> {
        let e = self.essential.space();
        let di = into_essential(e, delta)?;
        let mi = into_essential(e, mu)?;
        Ok(compose_bracket(delta, &di, mu, &mi))
    }

    /// `R_x|_E` for `x ∈ L`.
    pub fn right_map(&self, x: &[Scalar]) -> Matrix {
        restricted_right(&self.base, self.essential.space(), x)
    }

    /// Each basis derivation as an endomorphism of `E`.
    pub fn endomorphisms(&self) -> &[Matrix] {
        &self.inner
    }
}

/// `μ∘δ − δ∘μ`, given both maps in `L`-coordinates and in `E`-coordinates.
fn compose_bracket(delta: &Matrix, delta_e: &Matrix, mu: &Matrix, mu_e: &Matrix) -> Matrix {
    mu.mul(delta_e).sub(&delta.mul(mu_e))
}

/// `ψ : S → Q_m(L)`, `s ↦ R_s|_E`, for an algebra of quotients `S` of `L`.
///
/// `iota` has one column per basis vector of `L` giving its image in `S`;
/// its image must be the subalgebra of `ext`.
pub fn embed_psi(m: &MaximalQuotients, ext: &Extension, iota: &Matrix, seed: u64) -> Result<Matrix> {
    let base = m.base();
    let big = ext.big();
    if iota.rows() != big.dim() || iota.cols() != base.dim() {
        return Err(Error::DimensionMismatch {
            expected: big.dim() * base.dim(),
            found: iota.rows() * iota.cols(),
        });
    }
    let image = Subspace::from_vectors(big.field(), big.dim(), iota.columns());
    if &image != ext.small() || iota.rank() != base.dim() {
        return Err(Error::Precondition("iota must map L isomorphically onto the subalgebra".into()));
    }
    for i in 0..base.dim() {
        for j in 0..base.dim() {
            let lhs = iota.apply(base.basis_product(i, j));
            if lhs != big.bracket(&iota.column(i), &iota.column(j)) {
                return Err(Error::Precondition("iota is not a homomorphism".into()));
            }
        }
    }
    let cert = is_quotient_algebra(ext, &QuotientOptions::with_seed(seed))?;
    if !cert.verdict {
        return Err(Error::Precondition("S is not an algebra of quotients of L".into()));
    }
    let to_base = |v: &[Scalar]| image.contains(v).then(|| solve_iota(iota, v));
    let e_images: Vec<Vec<Scalar>> = m
        .essential()
        .space()
        .basis_vectors()
        .iter()
        .map(|u| iota.apply(u))
        .collect();
    let e_in_s = Subspace::from_vectors(big.field(), big.dim(), e_images.clone());
    let mut cols = Vec::with_capacity(big.dim());
    for k in 0..big.dim() {
        let s = big.unit(k);
        let lq = ext.quotient_ideal(&s)?;
        if !e_in_s.is_subspace_of(&ext.embed_subspace(lq.space())) {
            return Err(fault("E is not contained in (L : s)"));
        }
        let rs = big.right_operator(&s);
        let map_cols = e_images
            .iter()
            .map(|u| to_base(&rs.apply(u)).ok_or_else(|| fault("[E, s] leaves L")))
            .collect::<Result<Vec<_>>>()?;
        let map = Matrix::from_columns(base.field(), base.dim(), &map_cols);
        cols.push(m.coords_of(&map).ok_or_else(|| fault("R_s restricted to E is not a partial derivation"))?);
    }
    let psi = Matrix::from_columns(base.field(), m.dim(), &cols);
    if psi.rank() != big.dim() {
        return Err(fault("psi is not injective"));
    }
    for i in 0..big.dim() {
        for j in 0..big.dim() {
            let lhs = psi.apply(big.basis_product(i, j));
            if lhs != m.algebra().bracket(&psi.column(i), &psi.column(j)) {
                return Err(fault("psi is not a homomorphism"));
            }
        }
    }
    if &psi.mul(iota) != m.phi() {
        return Err(fault("psi does not restrict to phi on L"));
    }
    Ok(psi)
}

/// `L`-coordinates of a vector in the image of the injective map `iota`.
fn solve_iota(iota: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    let f = iota.field();
    let n = iota.cols();
    let mut rows: Vec<Vec<Scalar>> = (0..iota.rows())
        .map(|r| {
            let mut row = iota.row(r).to_vec();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = crate::linalg::matrix::rref_in_place(&mut rows, n + 1);
    let mut x = vec![f.zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        if p < n {
            x[p] = rows[r][n].clone();
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::catalog;
    use crate::Field;

    #[test]
    fn sl2_is_its_own_maximal_quotient() {
        let a = catalog::sl2(Field::Rational);
        let m = build_qmax(&a, &QmaxOptions::default()).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(m.phi_image().is_full());
    }

    #[test]
    fn block_sum_has_six_dimensions() {
        let a = catalog::sl2_sl2(Field::Rational);
        assert_eq!(build_qmax(&a, &QmaxOptions::default()).unwrap().dim(), 6);
    }

    #[test]
    fn finite_field_construction() {
        let a = catalog::sl2(Field::Prime(5));
        let m = build_qmax(&a, &QmaxOptions::default()).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(m.algebra().is_right_leibniz());
    }

    #[test]
    fn non_semiprime_is_rejected() {
        let a = catalog::l2(Field::Rational);
        assert!(matches!(
            build_qmax(&a, &QmaxOptions::default()),
            Err(Error::NotSemiprime(_))
        ));
    }

    #[test]
    fn psi_on_l_is_phi() {
        let a = catalog::sl2(Field::Rational);
        let m = build_qmax(&a, &QmaxOptions::default()).unwrap();
        let ext = Extension::trivial(a.clone());
        let psi = embed_psi(&m, &ext, &Matrix::identity(a.field(), 3), DEFAULT_SEED).unwrap();
        assert_eq!(&psi, m.phi());
    }

    #[test]
    fn psi_on_qmax_is_injective() {
        let a = catalog::sl2_sl2(Field::Rational);
        let m = build_qmax(&a, &QmaxOptions::default()).unwrap();
        let ext = m.extension().unwrap();
        let psi = embed_psi(&m, &ext, m.phi(), DEFAULT_SEED).unwrap();
        assert_eq!(psi.rank(), m.dim());
    }

    #[test]
    fn commutator_sign_convention() {
        let a = catalog::sl2(Field::Rational);
        let m = build_qmax(&a, &QmaxOptions::default()).unwrap();
        for d in m.space() {
            for x in m.essential().space().basis_vectors() {
                let rx = m.right_map(&x);
                let dx = d.apply(&x).unwrap();
                let neg: Vec<Scalar> = dx.iter().map(|s| -s).collect();
                assert_eq!(m.bracket_maps(&d.matrix, &rx).unwrap(), m.right_map(&neg));
                assert_eq!(m.bracket_maps(&rx, &d.matrix).unwrap(), m.right_map(&dx));
            }
        }
    }
}
