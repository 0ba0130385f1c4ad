//! Model Hamiltonians with ħ = 1: energies and frequencies share units
//! (rad/s for the cavity-QED models, any consistent unit for the Cooper-pair
//! box).

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Ising chain whose full diagonal is tabulated.
pub const ISING_MAX_SPINS: usize = 24;

/// Convert a frequency in GHz to angular frequency in rad/s.
pub fn ghz_to_angular(f_ghz: f64) -> f64 {
    2.0 * PI * 1e9 * f_ghz
}

// ---------------------------------------------------------------------------
// Cooper-pair box

/// Cooper-pair box in the charge basis `n ∈ [−N_c, N_c]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CpbParams {
    /// Charging energy E_C.
    pub e_c: f64,
    /// Josephson energy E_J.
    pub e_j: f64,
    /// Gate charge n_g in units of 2e.
    pub n_g: f64,
    /// Charge cutoff N_c.
    pub charge_cutoff: usize,
}

impl CpbParams {
    pub fn new(e_c: f64, e_j: f64, n_g: f64, charge_cutoff: usize) -> Result<Self> {
        let p = CpbParams { e_c, e_j, n_g, charge_cutoff };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.e_c > 0.0 && self.e_c.is_finite()) {
            return Err(Error::param(format!("E_C must be positive, got {}", self.e_c)));
        }
        if !(self.e_j >= 0.0 && self.e_j.is_finite()) {
            return Err(Error::param(format!("E_J must be non-negative, got {}", self.e_j)));
        }
        if !self.n_g.is_finite() {
            return Err(Error::param("n_g must be finite"));
        }
        if self.charge_cutoff < 1 {
            return Err(Error::param("charge cutoff must be at least 1"));
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        2 * self.charge_cutoff + 1
    }

    /// Diagonal `4E_C(n − n_g)²` for `n = −N_c..=N_c`.
    fn diagonal(&self) -> Vec<f64> {
        let nc = self.charge_cutoff as i64;
        (-nc..=nc)
            .map(|n| 4.0 * self.e_c * (n as f64 - self.n_g).powi(2))
            .collect()
    }
}

/// Dense charge-basis matrix: `4E_C(n − n_g)²` on the diagonal and
/// `−E_J/2` between neighbouring charge states (`cos φ` shifts `n` by ±1).
pub fn cooper_pair_matrix(params: &CpbParams) -> Result<DMatrix<f64>> {
    params.validate()?;
    let d = params.diagonal();
    let dim = d.len();
    let mut m = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = d[i];
        if i + 1 < dim {
            m[(i, i + 1)] = -params.e_j / 2.0;
            m[(i + 1, i)] = -params.e_j / 2.0;
        }
    }
    Ok(m)
}

/// The `k` lowest eigenvalues of the Cooper-pair-box Hamiltonian, ascending.
pub fn cooper_pair_spectrum(params: &CpbParams, k: usize) -> Result<Vec<f64>> {
    params.validate()?;
    let dim = params.dimension();
    if k == 0 || k > dim {
        return Err(Error::param(format!("levels must be in 1..={dim}, got {k}")));
    }
    let mut diag = params.diagonal();
    if params.e_j == 0.0 {
        diag.sort_by(f64::total_cmp);
        diag.truncate(k);
        return Ok(diag);
    }
    let off = vec![-params.e_j / 2.0; dim - 1];
    Ok((0..k).map(|i| tridiagonal_eigenvalue(&diag, &off, i)).collect())
}

/// Spread of the qubit transition `E₁ − E₀` over `samples` evenly spaced gate
/// charges in `[0, 1]`.
pub fn charge_dispersion(e_c: f64, e_j: f64, charge_cutoff: usize, samples: usize) -> Result<f64> {
    if samples < 2 {
        return Err(Error::param("charge dispersion needs at least two samples"));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..samples {
        let n_g = i as f64 / (samples - 1) as f64;
        let e = cooper_pair_spectrum(&CpbParams::new(e_c, e_j, n_g, charge_cutoff)?, 2)?;
        let gap = e[1] - e[0];
        lo = lo.min(gap);
        hi = hi.max(gap);
    }
    Ok(hi - lo)
}

/// `index`-th smallest eigenvalue of the symmetric tridiagonal matrix with
/// diagonal `d` and off-diagonal `e`, by Sturm-sequence bisection.
fn tridiagonal_eigenvalue(d: &[f64], e: &[f64], index: usize) -> f64 {
    let n = d.len();
    // Gershgorin interval
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let pivmin = f64::EPSILON * scale * f64::EPSILON;
    // number of eigenvalues strictly below x
    let count_below = |x: f64| -> usize {
        let mut count = 0;
        let mut q = d[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            q = d[i] - x - e[i - 1] * e[i - 1] / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

// ---------------------------------------------------------------------------
// Jaynes–Cummings

/// Qubit coupled to one cavity mode truncated at `fock_cutoff` photons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JcParams {
    pub omega_q: f64,
    pub omega_r: f64,
    pub g: f64,
    pub fock_cutoff: usize,
}

impl JcParams {
    pub fn new(omega_q: f64, omega_r: f64, g: f64, fock_cutoff: usize) -> Result<Self> {
        let p = JcParams { omega_q, omega_r, g, fock_cutoff };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_q.is_finite() && self.omega_r.is_finite()) {
            return Err(Error::param("JC frequencies must be finite"));
        }
        if !(self.g >= 0.0 && self.g.is_finite()) {
            return Err(Error::param(format!("coupling g must be non-negative, got {}", self.g)));
        }
        if self.fock_cutoff < 1 {
            return Err(Error::param("Fock cutoff must be at least 1"));
        }
        Ok(())
    }

    /// Δ = ω_q − ω_r.
    pub fn detuning(&self) -> f64 {
        self.omega_q - self.omega_r
    }

    pub fn dimension(&self) -> usize {
        2 * (self.fock_cutoff + 1)
    }

    /// Basis index of `|qubit, n⟩`; ground-state qubit block first.
    pub fn index(&self, excited: bool, photons: usize) -> usize {
        usize::from(excited) * (self.fock_cutoff + 1) + photons
    }
}

/// `H = (ω_q/2)σ_z ⊗ I + ω_r I ⊗ a†a + g(σ⁺⊗a + σ⁻⊗a†)`.
///
/// All entries are real, so the Hermitian matrix is returned as a real
/// symmetric one.
pub fn jc_hamiltonian(params: &JcParams) -> Result<DMatrix<f64>> {
    params.validate()?;
    let dim = params.dimension();
    let mut h = DMatrix::zeros(dim, dim);
    for n in 0..=params.fock_cutoff {
        let photon = params.omega_r * n as f64;
        let g = params.index(false, n);
        let e = params.index(true, n);
        h[(g, g)] = -params.omega_q / 2.0 + photon;
        h[(e, e)] = params.omega_q / 2.0 + photon;
        if n >= 1 {
            // σ⁺a: |g, n⟩ → √n |e, n−1⟩
            let e_below = params.index(true, n - 1);
            let amp = params.g * (n as f64).sqrt();
            h[(e_below, g)] = amp;
            h[(g, e_below)] = amp;
        }
    }
    Ok(h)
}

/// Excitation number `σ⁺σ⁻ ⊗ I + I ⊗ a†a` in the [`jc_hamiltonian`] basis.
pub fn jc_excitation_number(params: &JcParams) -> DMatrix<f64> {
    let dim = params.dimension();
    let mut m = DMatrix::zeros(dim, dim);
    for n in 0..=params.fock_cutoff {
        m[(params.index(false, n), params.index(false, n))] = n as f64;
        m[(params.index(true, n), params.index(true, n))] = n as f64 + 1.0;
    }
    m
}

/// JC spectrum, ascending, from its excitation-number blocks: `|g,0⟩`, the
/// 2×2 doublets `{|e,k−1⟩, |g,k⟩}` with eigenvalues
/// `(k − ½)ω_r ± √(Δ²/4 + g²k)`, and the truncation edge `|e,n_max⟩`.
pub fn jc_spectrum(params: &JcParams) -> Result<Vec<f64>> {
    params.validate()?;
    let delta = params.detuning();
    let mut levels = Vec::with_capacity(params.dimension());
    levels.push(-params.omega_q / 2.0);
    for k in 1..=params.fock_cutoff {
        let mean = (k as f64 - 0.5) * params.omega_r;
        let split = (delta * delta / 4.0 + params.g * params.g * k as f64).sqrt();
        levels.push(mean - split);
        levels.push(mean + split);
    }
    levels.push(params.omega_q / 2.0 + params.fock_cutoff as f64 * params.omega_r);
    levels.sort_by(f64::total_cmp);
    Ok(levels)
}

/// Precomputed eigendecomposition for evaluating `|e,0⟩` survival at many
/// times.
#[derive(Debug, Clone)]
pub struct JcDynamics {
    eigenvalues: DVector<f64>,
    /// `|⟨λ_k|e,0⟩|²` per eigenvector.
    weights: Vec<f64>,
}

impl JcDynamics {
    pub fn new(params: &JcParams) -> Result<Self> {
        let mut h = jc_hamiltonian(params)?;
        let start = params.index(true, 0);
        // shift by ⟨e,0|H|e,0⟩ so phases stay small; populations are unaffected
        let shift = h[(start, start)];
        for i in 0..h.nrows() {
            h[(i, i)] -= shift;
        }
        let eig = SymmetricEigen::new(h);
        let weights = (0..eig.eigenvalues.len())
            .map(|k| eig.eigenvectors[(start, k)].powi(2))
            .collect();
        Ok(JcDynamics {
            eigenvalues: eig.eigenvalues,
            weights,
        })
    }

    /// `P_e(t) = |⟨e,0| e^{−iHt} |e,0⟩|²`.
    pub fn excited_population(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::param(format!("time must be non-negative, got {t}")));
        }
        let amp: C64 = self
            .eigenvalues
            .iter()
            .zip(&self.weights)
            .map(|(&l, &w)| C64::from_polar(w, -l * t))
            .sum();
        Ok(amp.norm_sqr())
    }
}

/// Excited-state population at time `t` starting from qubit excited, cavity
/// in vacuum.
pub fn jc_excited_population(params: &JcParams, t: f64) -> Result<f64> {
    JcDynamics::new(params)?.excited_population(t)
}

// ---------------------------------------------------------------------------
// Purcell decay

/// Inputs to the dispersive Purcell rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PurcellInputs {
    pub g: f64,
    pub delta: f64,
    pub kappa: f64,
}

impl PurcellInputs {
    /// Use a cavity decay rate derived from `ω_r` and `Q_r`.
    pub fn from_cavity(g: f64, delta: f64, omega_r: f64, q_r: f64) -> Result<Self> {
        Ok(PurcellInputs {
            g,
            delta,
            kappa: cavity_kappa(omega_r, q_r)?,
        })
    }
}

/// Γ = κ g² / Δ².
pub fn purcell_rate(inputs: &PurcellInputs) -> Result<f64> {
    if inputs.delta == 0.0 {
        return Err(Error::Domain(
            "Purcell rate undefined on resonance (Δ = 0)".into(),
        ));
    }
    // ratio first, so g = ±Δ returns κ unrounded
    Ok(inputs.kappa * (inputs.g / inputs.delta).powi(2))
}

/// κ = ω_r / Q_r.
pub fn cavity_kappa(omega_r: f64, q_r: f64) -> Result<f64> {
    if !(q_r > 0.0) {
        return Err(Error::param(format!("quality factor must be positive, got {q_r}")));
    }
    Ok(omega_r / q_r)
}

// ---------------------------------------------------------------------------
// Longitudinal Ising chain

/// Open chain of `N` spins with site fields `h_l` and bond couplings `J_l`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsingParams {
    fields: Vec<f64>,
    couplings: Vec<f64>,
}

impl IsingParams {
    pub fn new(fields: Vec<f64>, couplings: Vec<f64>) -> Result<Self> {
        if fields.is_empty() {
            return Err(Error::param("Ising chain needs at least one spin"));
        }
        if couplings.len() + 1 != fields.len() {
            return Err(Error::param(format!(
                "{} spins need {} couplings, got {}",
                fields.len(),
                fields.len() - 1,
                couplings.len()
            )));
        }
        if fields.iter().chain(&couplings).any(|v| !v.is_finite()) {
            return Err(Error::param("Ising parameters must be finite"));
        }
        Ok(IsingParams { fields, couplings })
    }

    /// Uniform chain.
    pub fn uniform(n: usize, h: f64, j: f64) -> Result<Self> {
        Self::new(vec![h; n], vec![j; n.saturating_sub(1)])
    }

    pub fn num_spins(&self) -> usize {
        self.fields.len()
    }

    pub fn fields(&self) -> &[f64] {
        &self.fields
    }

    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }

    /// Energy of one configuration; bit `l` of `config` is spin `l`, with
    /// `z = +1` for bit 0 and `z = −1` for bit 1.
    pub fn energy(&self, config: usize) -> f64 {
        let z = |l: usize| if (config >> l) & 1 == 0 { 1.0 } else { -1.0 };
        let field: f64 = self.fields.iter().enumerate().map(|(l, h)| -h * z(l)).sum();
        let bonds: f64 = self
            .couplings
            .iter()
            .enumerate()
            .map(|(l, j)| j * z(l) * z(l + 1))
            .sum();
        field + bonds
    }
}

/// `E(s) = −Σ h_l z_l + Σ J_l z_l z_{l+1}` for every configuration, indexed
/// like state-vector amplitudes.
pub fn ising_energies(params: &IsingParams) -> Result<Vec<f64>> {
    let n = params.num_spins();
    if n > ISING_MAX_SPINS {
        return Err(Error::Resource(format!(
            "{n} spins exceeds the tabulation limit of {ISING_MAX_SPINS}"
        )));
    }
    Ok((0..1usize << n)
        .into_par_iter()
        .map(|s| params.energy(s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
        let mut v: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn free_charge_levels() {
        let p = CpbParams::new(1.0, 0.0, 0.0, 5).unwrap();
        assert_eq!(cooper_pair_spectrum(&p, 3).unwrap(), vec![0.0, 4.0, 4.0]);
    }

    #[test]
    fn free_charge_levels_off_sweet_spot_are_exact() {
        let p = CpbParams::new(0.7, 0.0, 0.3, 4).unwrap();
        let mut want: Vec<f64> = (-4..=4).map(|n| 4.0 * 0.7 * (n as f64 - 0.3).powi(2)).collect();
        want.sort_by(f64::total_cmp);
        assert_eq!(cooper_pair_spectrum(&p, 9).unwrap(), want);
    }

    #[test]
    fn sweet_spot_splitting_matches_dense_oracle() {
        let p = CpbParams::new(1.0, 0.1, 0.5, 5).unwrap();
        let got = cooper_pair_spectrum(&p, 11).unwrap();
        let oracle = dense_eigenvalues(cooper_pair_matrix(&p).unwrap());
        for (a, b) in got.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
        let split = got[1] - got[0];
        assert!((split - 0.1).abs() < 1e-3, "split {split}");
    }

    #[test]
    fn transmon_limit() {
        let p = CpbParams::new(1.0, 50.0, 0.0, 30).unwrap();
        let e = cooper_pair_spectrum(&p, 2).unwrap();
        let oracle = dense_eigenvalues(cooper_pair_matrix(&p).unwrap());
        assert!((e[0] - oracle[0]).abs() < 1e-10);
        assert!((e[1] - oracle[1]).abs() < 1e-10);
        let asymptotic = (8.0f64 * 50.0).sqrt() - 1.0;
        assert!(((e[1] - e[0]) - asymptotic).abs() / asymptotic < 0.02);
    }

    #[test]
    fn spectrum_rejects_bad_level_count() {
        let p = CpbParams::new(1.0, 1.0, 0.0, 2).unwrap();
        assert!(matches!(cooper_pair_spectrum(&p, 6), Err(Error::Parameter(_))));
        assert!(matches!(cooper_pair_spectrum(&p, 0), Err(Error::Parameter(_))));
        assert!(CpbParams::new(0.0, 1.0, 0.0, 2).is_err());
        assert!(CpbParams::new(1.0, -1.0, 0.0, 2).is_err());
        assert!(CpbParams::new(1.0, 1.0, 0.0, 0).is_err());
    }

    #[test]
    fn integer_gate_charge_translation() {
        for (e_j, n_g) in [(0.5, 0.1), (5.0, 0.37), (20.0, 0.8)] {
            let a = cooper_pair_spectrum(&CpbParams::new(1.0, e_j, n_g, 12).unwrap(), 3).unwrap();
            let b =
                cooper_pair_spectrum(&CpbParams::new(1.0, e_j, n_g + 1.0, 12).unwrap(), 3).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-6, "E_J={e_j}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn charge_dispersion_falls_with_ej_over_ec() {
        let d: Vec<f64> = [1.0, 5.0, 10.0, 50.0]
            .iter()
            .map(|&r| charge_dispersion(1.0, r, 30, 41).unwrap())
            .collect();
        assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
    }

    #[test]
    fn uncoupled_jc_levels() {
        let p = JcParams::new(5.1, 5.0, 0.0, 3).unwrap();
        let got = jc_spectrum(&p).unwrap();
        let mut want: Vec<f64> = (0..=3)
            .flat_map(|n| [-5.1 / 2.0 + 5.0 * n as f64, 5.1 / 2.0 + 5.0 * n as f64])
            .collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
        let h = jc_hamiltonian(&p).unwrap();
        assert_eq!(h, DMatrix::from_diagonal(&h.diagonal()));
    }

    #[test]
    fn vacuum_rabi_splitting() {
        let g = 0.3;
        let p = JcParams::new(4.0, 4.0, g, 1).unwrap();
        let h = jc_hamiltonian(&p).unwrap();
        let (e0, g1) = (p.index(true, 0), p.index(false, 1));
        let block = DMatrix::from_row_slice(2, 2, &[h[(e0, e0)], h[(e0, g1)], h[(g1, e0)], h[(g1, g1)]]);
        let ev = dense_eigenvalues(block);
        assert!(((ev[1] - ev[0]) - 2.0 * g).abs() < 1e-12);
    }

    #[test]
    fn jc_spectrum_matches_dense_oracle() {
        let p = JcParams::new(5.1, 5.0, 0.05, 4).unwrap();
        let h = jc_hamiltonian(&p).unwrap();
        assert!((&h - h.transpose()).norm() < 1e-12);
        let oracle = dense_eigenvalues(h);
        let got = jc_spectrum(&p).unwrap();
        assert_eq!(got.len(), oracle.len());
        for (a, b) in got.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn fock_truncation_converged_for_low_levels() {
        for cutoff in [2usize, 4, 6] {
            let a = JcParams::new(5.1, 5.0, 0.05, cutoff).unwrap();
            let b = JcParams { fock_cutoff: cutoff + 2, ..a };
            // levels with at most `cutoff` excitations are untouched by truncation
            let la = jc_spectrum(&a).unwrap();
            let lb = jc_spectrum(&b).unwrap();
            for k in 0..2 * cutoff - 1 {
                assert!((la[k] - lb[k]).abs() < 1e-8, "cutoff {cutoff} level {k}");
            }
            let pa = jc_excited_population(&a, 7.3).unwrap();
            let pb = jc_excited_population(&b, 7.3).unwrap();
            assert!((pa - pb).abs() < 1e-8);
        }
    }

    #[test]
    fn jc_conserves_excitation_number() {
        let p = JcParams::new(5.1, 4.7, 0.2, 6).unwrap();
        let h = jc_hamiltonian(&p).unwrap();
        let n = jc_excitation_number(&p);
        assert!((&h * &n - &n * &h).norm() < 1e-12);
    }

    #[test]
    fn resonant_rabi_oscillation() {
        let g = 0.25;
        let p = JcParams::new(6.0, 6.0, g, 3).unwrap();
        let dyn_ = JcDynamics::new(&p).unwrap();
        let period = PI / g;
        for i in 0..=200 {
            let t = period * i as f64 / 200.0;
            let want = (g * t).cos().powi(2);
            assert!((dyn_.excited_population(t).unwrap() - want).abs() < 1e-9);
            let later = dyn_.excited_population(t + period).unwrap();
            assert!((later - dyn_.excited_population(t).unwrap()).abs() < 1e-8);
        }
    }

    #[test]
    fn decoupled_qubit_stays_excited() {
        let p = JcParams::new(5.0, 4.0, 0.0, 2).unwrap();
        for t in [0.0, 0.3, 11.0, 1e3] {
            assert!((jc_excited_population(&p, t).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(jc_excited_population(&p, -1.0).is_err());
    }

    /// exp(−iHt)|e,0⟩ by scaling and squaring of a Taylor series.
    fn expm_population(h: &DMatrix<f64>, start: usize, t: f64) -> f64 {
        let n = h.nrows();
        let a: DMatrix<C64> = h.map(|x| C64::new(0.0, -x * t));
        let norm = a.iter().map(|z| z.norm()).fold(0.0, f64::max) * n as f64;
        let squarings = (norm.max(1.0).log2().ceil() as i32 + 4).max(0);
        let scaled = a / C64::new(2f64.powi(squarings), 0.0);
        let mut term = DMatrix::<C64>::identity(n, n);
        let mut sum = term.clone();
        for k in 1..30 {
            term = &term * &scaled / C64::new(k as f64, 0.0);
            sum += &term;
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum[(start, start)].norm_sqr()
    }

    #[test]
    fn detuned_rabi_minimum() {
        let g = 0.1;
        let delta = 10.0 * g;
        let p = JcParams::new(5.0 + delta, 5.0, g, 2).unwrap();
        let dyn_ = JcDynamics::new(&p).unwrap();
        let rabi = 2.0 * (g * g + delta * delta / 4.0).sqrt();
        let t_min = PI / rabi;
        let want = 1.0 - 1.0 / 26.0;
        assert!((dyn_.excited_population(t_min).unwrap() - want).abs() < 1e-9);
        // no sampled time dips below the analytic minimum
        for i in 0..2000 {
            let t = 4.0 * t_min * i as f64 / 2000.0;
            assert!(dyn_.excited_population(t).unwrap() >= want - 1e-12);
        }
        // independent matrix-exponential route
        let h = jc_hamiltonian(&p).unwrap();
        for t in [0.37 * t_min, t_min, 2.6 * t_min] {
            let oracle = expm_population(&h, p.index(true, 0), t);
            assert!((oracle - dyn_.excited_population(t).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn purcell_examples() {
        let r = purcell_rate(&PurcellInputs { g: 3.0, delta: 3.0, kappa: 1.0 }).unwrap();
        assert_eq!(r, 1.0);
        let r = purcell_rate(&PurcellInputs { g: 0.1, delta: 1.0, kappa: 1e6 }).unwrap();
        assert!((r - 1e4).abs() < 1e-8);

        let omega_r = 2.0 * PI * 5e9;
        let kappa = cavity_kappa(omega_r, 1e4).unwrap();
        assert!((kappa - 2.0 * PI * 5e5).abs() < 1e-6);
        let inputs = PurcellInputs::from_cavity(0.05, 1.0, omega_r, 1e4).unwrap();
        let r = purcell_rate(&inputs).unwrap();
        assert!((r - 2.0 * PI * 1.25e3).abs() < 1e-6);

        assert!(matches!(
            purcell_rate(&PurcellInputs { g: 1.0, delta: 0.0, kappa: 1.0 }),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(cavity_kappa(1.0, 1.0).unwrap(), 1.0);
        let a = cavity_kappa(7.0, 3.0).unwrap();
        let b = cavity_kappa(7.0, 6.0).unwrap();
        assert_eq!(a, 2.0 * b);
        assert!(matches!(cavity_kappa(1.0, 0.0), Err(Error::Parameter(_))));
        assert!(matches!(cavity_kappa(1.0, -2.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn ising_two_spin_examples() {
        let e = ising_energies(&IsingParams::new(vec![0.0, 0.0], vec![1.0]).unwrap()).unwrap();
        assert_eq!(e, vec![1.0, -1.0, -1.0, 1.0]);
        let e = ising_energies(&IsingParams::new(vec![1.0, 1.0], vec![0.0]).unwrap()).unwrap();
        assert_eq!(e, vec![-2.0, 0.0, 0.0, 2.0]);
    }

    #[test]
    fn ising_three_spin_enumeration() {
        let h = [0.3, -0.2, 0.5];
        let j = [1.1, -0.7];
        let e = ising_energies(&IsingParams::new(h.to_vec(), j.to_vec()).unwrap()).unwrap();
        for s0 in 0..2usize {
            for s1 in 0..2usize {
                for s2 in 0..2usize {
                    let z = |b: usize| 1.0 - 2.0 * b as f64;
                    let want = -h[0] * z(s0) - h[1] * z(s1) - h[2] * z(s2)
                        + j[0] * z(s0) * z(s1)
                        + j[1] * z(s1) * z(s2);
                    assert!((e[s2 << 2 | s1 << 1 | s0] - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ising_rejects_bad_shapes() {
        assert!(IsingParams::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(IsingParams::new(vec![], vec![]).is_err());
        let big = IsingParams::uniform(ISING_MAX_SPINS + 1, 0.0, 1.0).unwrap();
        assert!(matches!(ising_energies(&big), Err(Error::Resource(_))));
    }

    proptest! {
        #[test]
        fn zero_field_spectrum_flip_symmetric(j in prop::collection::vec(-2.0f64..2.0, 1..7)) {
            let n = j.len() + 1;
            let p = IsingParams::new(vec![0.0; n], j).unwrap();
            let e = ising_energies(&p).unwrap();
            let mask = (1usize << n) - 1;
            for s in 0..e.len() {
                prop_assert!((e[s] - e[s ^ mask]).abs() < 1e-12);
            }
            prop_assert!(e.iter().sum::<f64>().abs() < 1e-9);
        }
    }
}
