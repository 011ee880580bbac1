//! Transition matrices between the TD-D bases of a Leonard system and its
//! dual: the polynomial values `P_ij` (script P), the weights `k_j`,
//! `k*_j`, the normalization `nu` with `P P* = nu I`, and the terminating
//! hypergeometric specializations for the two built-in families.

use crate::canon::td_d;
use crate::field::{pow_i64, Field};
use crate::matrix::Matrix;
use crate::parray::{ArrayError, D4Gen, ParameterArray, QRacahParams};

/// The transition data attached to a parameter array: `p_mat` and
/// `p_star_mat` have all-ones first columns and satisfy
/// `p_mat * p_star_mat = nu I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionData<F> {
    pub p_mat: Matrix<F>,
    pub p_star_mat: Matrix<F>,
    pub k: Vec<F>,
    pub k_star: Vec<F>,
    pub nu: F,
    pub source: ParameterArray<F>,
}

/// The scalar
///
/// ```text
/// script_P_ij = sum_n (th_i-th_0)...(th_i-th_{n-1}) (th*_j-th*_0)...(th*_j-th*_{n-1})
///               -----------------------------------------------------------------
///                                varphi_1 varphi_2 ... varphi_n
/// ```
///
/// The sum runs to `n = min(i, j)`: the next numerator acquires a vanishing
/// factor. Requires a valid array and `i, j <= d`.
pub fn script_p<F: Field>(p: &ParameterArray<F>, i: usize, j: usize) -> F {
    script_p_to(p, i, j, i.min(j))
}

/// Full-range evaluation of the same sum, to `n = d`. Agrees with
/// [`script_p`] entrywise; kept as an independent cross-check of the
/// truncation.
pub fn script_p_full<F: Field>(p: &ParameterArray<F>, i: usize, j: usize) -> F {
    script_p_to(p, i, j, p.d())
}

fn script_p_to<F: Field>(p: &ParameterArray<F>, i: usize, j: usize, n_max: usize) -> F {
    let d = p.d();
    assert!(i <= d && j <= d, "indices must lie in 0..=d");
    let ctx = p.ctx();
    let theta = p.theta();
    let theta_star = p.theta_star();
    let mut total = F::zero(&ctx);
    let mut term = F::one(&ctx);
    total = total + term.clone();
    for n in 1..=n_max {
        term = term
            * (theta[i].clone() - theta[n - 1].clone())
            * (theta_star[j].clone() - theta_star[n - 1].clone())
            / p.varphi_at(n);
        total = total + term.clone();
    }
    total
}

/// The weights `k_j`, `k*_j` and the normalization `nu`:
///
/// ```text
/// k_j  = varphi_1..varphi_j   prod_{h != 0} (th*_0 - th*_h)
///        ------------------ * ----------------------------
///        phi_1..phi_j          prod_{h != j} (th*_j - th*_h)
///
/// k*_j = varphi_1..varphi_j     prod_{h != 0} (th_0 - th_h)
///        -------------------- * ---------------------------
///        phi_d..phi_{d-j+1}      prod_{h != j} (th_j - th_h)
///
/// nu   = prod_{h != 0} (th_0 - th_h)(th*_0 - th*_h) / (phi_1..phi_d)
/// ```
pub fn weights<F: Field>(p: &ParameterArray<F>) -> Result<(Vec<F>, Vec<F>, F), ArrayError> {
    if !p.validate().valid() {
        return Err(ArrayError::InvalidInput);
    }
    let d = p.d();
    let ctx = p.ctx();
    let theta = p.theta();
    let theta_star = p.theta_star();
    let offdiag_products = |seq: &[F], j: usize| -> F {
        let mut acc = F::one(&ctx);
        for h in 0..=d {
            if h != j {
                acc = acc * (seq[j].clone() - seq[h].clone());
            }
        }
        acc
    };
    let mut k = Vec::with_capacity(d + 1);
    let mut k_star = Vec::with_capacity(d + 1);
    let mut varphi_prod = F::one(&ctx);
    let mut phi_prod = F::one(&ctx);
    let mut phi_rev_prod = F::one(&ctx);
    let star_top = offdiag_products(theta_star, 0);
    let top = offdiag_products(theta, 0);
    for j in 0..=d {
        if j >= 1 {
            varphi_prod = varphi_prod * p.varphi_at(j);
            phi_prod = phi_prod * p.phi_at(j);
            phi_rev_prod = phi_rev_prod * p.phi_at(d - j + 1);
        }
        k.push(
            varphi_prod.clone() / phi_prod.clone() * star_top.clone()
                / offdiag_products(theta_star, j),
        );
        k_star.push(
            varphi_prod.clone() / phi_rev_prod.clone() * top.clone()
                / offdiag_products(theta, j),
        );
    }
    let mut nu = F::one(&ctx);
    for h in 1..=d {
        nu = nu
            * (theta[0].clone() - theta[h].clone())
            * (theta_star[0].clone() - theta_star[h].clone());
    }
    for m in 1..=d {
        nu = nu / p.phi_at(m);
    }
    Ok((k, k_star, nu))
}

/// Builds the full transition data: `P_ij = k_j script_P_ij` and
/// `P*_ij = k*_j script_P_ji`.
pub fn transition_matrices<F: Field>(
    p: &ParameterArray<F>,
) -> Result<TransitionData<F>, ArrayError> {
    let (k, k_star, nu) = weights(p)?;
    let d = p.d();
    let ctx = p.ctx();
    let mut p_mat = Matrix::zero(d + 1, &ctx);
    let mut p_star_mat = Matrix::zero(d + 1, &ctx);
    for i in 0..=d {
        for j in 0..=d {
            *p_mat.at_mut(i, j) = k[j].clone() * script_p(p, i, j);
            *p_star_mat.at_mut(i, j) = k_star[j].clone() * script_p(p, j, i);
        }
    }
    Ok(TransitionData {
        p_mat,
        p_star_mat,
        k,
        k_star,
        nu,
        source: p.clone(),
    })
}

/// The intertwining identities between the TD-D realizations of a system
/// and its dual. With `T = td(p)`, `T* = td(p*)`, `D = diag(theta*)` and
/// `D* = diag(theta)`:
///
/// ```text
/// D* P = P T        T* P  = P D
/// T P* = P* D*      D P*  = P* T*
/// ```
///
/// True for every valid array.
pub fn intertwine_check<F: Field>(p: &ParameterArray<F>) -> Result<bool, ArrayError> {
    let data = transition_matrices(p)?;
    let dual = p.d4_act(&[D4Gen::Star])?;
    let t = td_d(p)?.a;
    let t_dual = td_d(&dual)?.a;
    let diag_theta = Matrix::diagonal(p.theta());
    let diag_theta_star = Matrix::diagonal(p.theta_star());
    let pm = &data.p_mat;
    let ps = &data.p_star_mat;
    Ok(&diag_theta * pm == pm * &t
        && &t_dual * pm == pm * &diag_theta_star
        && &t * ps == ps * &diag_theta
        && &diag_theta_star * ps == ps * &t_dual)
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer<F: Field>(a: &F, n: usize) -> F {
    let ctx = a.ctx();
    let mut acc = F::one(&ctx);
    for m in 0..n {
        acc = acc * (a.clone() + F::from_i64(&ctx, m as i64));
    }
    acc
}

/// q-shifted factorial `(a; q)_n = (1-a)(1-aq)...(1-aq^{n-1})`.
pub fn q_pochhammer<F: Field>(a: &F, q: &F, n: usize) -> F {
    let ctx = a.ctx();
    let one = F::one(&ctx);
    let mut acc = one.clone();
    let mut factor = a.clone();
    for _ in 0..n {
        acc = acc * (one.clone() - factor.clone());
        factor = factor * q.clone();
    }
    acc
}

/// The terminating series
/// `sum_{n=0}^{d} (-i)_n (-j)_n 2^n / ((-d)_n n!)`, which reproduces
/// `script_p` on the Krawtchouk array of diameter `d`. Requires the same
/// characteristic bound as the array itself.
pub fn hyper_2f1<F: Field>(d: usize, ctx: &F::Ctx, i: usize, j: usize) -> Result<F, ArrayError> {
    if !crate::field::characteristic_guard(F::characteristic(ctx), 2 * d) {
        return Err(ArrayError::BadCharacteristic);
    }
    assert!(i <= d && j <= d, "indices must lie in 0..=d");
    let int = |n: i64| F::from_i64(ctx, n);
    let mut total = F::zero(ctx);
    let mut term = F::one(ctx);
    total = total + term.clone();
    for n in 1..=i.min(j) {
        let m = n as i64 - 1;
        term = term * int(m - i as i64) * int(m - j as i64) * int(2)
            / (int(m - d as i64) * int(n as i64));
        total = total + term.clone();
    }
    Ok(total)
}

/// The terminating basic hypergeometric series
///
/// ```text
/// sum_{n=0}^{d} (q^-i;q)_n (s q^{i+1};q)_n (q^-j;q)_n (s* q^{j+1};q)_n q^n
///               ----------------------------------------------------------
///               (r1 q;q)_n (r2 q;q)_n (q^-d;q)_n (q;q)_n
/// ```
///
/// which reproduces `script_p` on the q-Racah array of the same parameters.
pub fn hyper_4phi3<F: Field>(
    params: &QRacahParams<F>,
    i: usize,
    j: usize,
) -> Result<F, ArrayError> {
    params.array()?; // admissibility of the parameters
    let d = params.d;
    assert!(i <= d && j <= d, "indices must lie in 0..=d");
    let ctx = params.q.ctx();
    let one = F::one(&ctx);
    let q = &params.q;
    let mut numers = [
        pow_i64(q, -(i as i64)),
        params.s.clone() * pow_i64(q, i as i64 + 1),
        pow_i64(q, -(j as i64)),
        params.s_star.clone() * pow_i64(q, j as i64 + 1),
    ];
    let mut denoms = [
        params.r1.clone() * q.clone(),
        params.r2.clone() * q.clone(),
        pow_i64(q, -(d as i64)),
        q.clone(),
    ];
    let mut total = F::zero(&ctx);
    let mut term = F::one(&ctx);
    total = total + term.clone();
    for _ in 1..=d {
        for x in numers.iter() {
            term = term * (one.clone() - x.clone());
        }
        for x in denoms.iter() {
            term = term / (one.clone() - x.clone());
        }
        term = term * q.clone();
        for x in numers.iter_mut() {
            *x = x.clone() * q.clone();
        }
        for x in denoms.iter_mut() {
            *x = x.clone() * q.clone();
        }
        total = total + term.clone();
    }
    Ok(total)
}

/// The closed-form q-Racah weights:
///
/// ```text
/// k_j  = (r1 q;q)_j (r2 q;q)_j (q^-d;q)_j (s* q;q)_j (1 - s* q^{2j+1})
///        ---------------------------------------------------------------
///        s^j q^j (q;q)_j (s* q/r1;q)_j (s* q/r2;q)_j (s* q^{d+2};q)_j (1 - s* q)
/// ```
///
/// with `k*_j` the same expression under `s <-> s*`, and
///
/// ```text
/// nu = (s q^2;q)_d (s* q^2;q)_d / (r1^d q^d (s q/r1;q)_d (s* q/r1;q)_d)
/// ```
///
/// Matches the generic [`weights`] on the same array. The displayed
/// quotients additionally require `s q^m != 1` and `s* q^m != 1` for
/// `m = 1` and `m = 2d+1`; parameters violating that are rejected even
/// though the array itself exists.
pub fn qracah_weights<F: Field>(
    params: &QRacahParams<F>,
) -> Result<(Vec<F>, Vec<F>, F), ArrayError> {
    params.array()?;
    let d = params.d;
    let ctx = params.q.ctx();
    let one = F::one(&ctx);
    let q = &params.q;
    for m in [1i64, 2 * d as i64 + 1] {
        for (name, x) in [("s", &params.s), ("s*", &params.s_star)] {
            if x.clone() * pow_i64(q, m) == one {
                return Err(ArrayError::ConstraintViolated(format!("{name} q^{m} = 1")));
            }
        }
    }
    let weight = |s_here: &F, s_there: &F, j: usize| -> F {
        let num = q_pochhammer(&(params.r1.clone() * q.clone()), q, j)
            * q_pochhammer(&(params.r2.clone() * q.clone()), q, j)
            * q_pochhammer(&pow_i64(q, -(d as i64)), q, j)
            * q_pochhammer(&(s_there.clone() * q.clone()), q, j)
            * (one.clone() - s_there.clone() * pow_i64(q, 2 * j as i64 + 1));
        let den = pow_i64(s_here, j as i64)
            * pow_i64(q, j as i64)
            * q_pochhammer(q, q, j)
            * q_pochhammer(&(s_there.clone() * q.clone() / params.r1.clone()), q, j)
            * q_pochhammer(&(s_there.clone() * q.clone() / params.r2.clone()), q, j)
            * q_pochhammer(&(s_there.clone() * pow_i64(q, d as i64 + 2)), q, j)
            * (one.clone() - s_there.clone() * q.clone());
        num / den
    };
    let k: Vec<F> = (0..=d).map(|j| weight(&params.s, &params.s_star, j)).collect();
    let k_star: Vec<F> = (0..=d).map(|j| weight(&params.s_star, &params.s, j)).collect();
    let nu = q_pochhammer(&(params.s.clone() * pow_i64(q, 2)), q, d)
        * q_pochhammer(&(params.s_star.clone() * pow_i64(q, 2)), q, d)
        / (pow_i64(&params.r1, d as i64)
            * pow_i64(q, d as i64)
            * q_pochhammer(&(params.s.clone() * q.clone() / params.r1.clone()), q, d)
            * q_pochhammer(&(params.s_star.clone() * q.clone() / params.r1.clone()), q, d));
    Ok((k, k_star, nu))
}
