//! Oracles that recompute curvature quantities without going through the
//! library's Ricci/eigenvalue path.

#![allow(dead_code)]

use ideal4_core::geom::{ChartPoint, Immersion};

pub type V4 = [f64; 4];

fn dot(a: &V4, b: &V4) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &mut V4, a: f64, x: &V4) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Second fundamental form in a Gram–Schmidt orthonormal tangent frame.
pub fn frame_h(imm: &dyn Immersion, p: &ChartPoint) -> [[f64; 3]; 3] {
    let d = imm.partials(p).expect("partials");
    // e[a] = Σ c[a][i] ∂ᵢL
    let mut e = [[0.0; 4]; 3];
    let mut c = [[0.0; 3]; 3];
    for a in 0..3 {
        let mut v = d.first[a];
        let mut coeff = [0.0; 3];
        coeff[a] = 1.0;
        for b in 0..a {
            let proj = dot(&v, &e[b]);
            axpy(&mut v, -proj, &e[b]);
            for i in 0..3 {
                coeff[i] -= proj * c[b][i];
            }
        }
        let len = dot(&v, &v).sqrt();
        e[a] = v.map(|x| x / len);
        c[a] = coeff.map(|x| x / len);
    }
    // Unit normal from the standard basis vector with the largest normal component.
    let mut best = [0.0; 4];
    for k in 0..4 {
        let mut v = [0.0; 4];
        v[k] = 1.0;
        for ea in &e {
            let proj = dot(&v, ea);
            axpy(&mut v, -proj, ea);
        }
        if dot(&v, &v) > dot(&best, &best) {
            best = v;
        }
    }
    let n = best.map(|x| x / dot(&best, &best).sqrt());
    let mut h = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let mut s = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    s += c[a][i] * c[b][j] * dot(&d.second[i][j], &n);
                }
            }
            h[a][b] = s;
        }
    }
    h
}

fn form(h: &[[f64; 3]; 3], x: &[f64; 3], y: &[f64; 3]) -> f64 {
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += h[i][j] * x[i] * y[j];
        }
    }
    s
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Sectional curvature (Gauss equation) of the frame plane orthogonal to `m`.
pub fn plane_curvature(h: &[[f64; 3]; 3], theta: f64, phi: f64) -> f64 {
    let m = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let helper = if m[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let x = cross(&m, &helper);
    let lx = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let x = x.map(|v| v / lx);
    let y = cross(&m, &x);
    form(h, &x, &x) * form(h, &y, &y) - form(h, &x, &y).powi(2)
}

#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub delta: f64,
    pub tau: f64,
    pub inf_k: f64,
    pub mean_sq: f64,
    pub planes: usize,
}

/// `δ = τ − min K`, minimizing over `samples` Fibonacci-sphere plane normals
/// and then refining the best few by pattern search.
pub fn brute_force_delta(imm: &dyn Immersion, p: &ChartPoint, samples: usize) -> BruteForce {
    let h = frame_h(imm, p);
    let tau = h[0][0] * h[1][1] - h[0][1].powi(2) + h[0][0] * h[2][2] - h[0][2].powi(2) + h[1][1] * h[2][2]
        - h[1][2].powi(2);
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let mut cands: Vec<(f64, f64, f64)> = (0..samples)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / samples as f64;
            let (theta, phi) = (z.acos(), golden * i as f64);
            (plane_curvature(&h, theta, phi), theta, phi)
        })
        .collect();
    cands.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut evaluations = samples;
    let mut inf_k = f64::INFINITY;
    for &(k0, t0, p0) in cands.iter().take(8) {
        let (mut k, mut t, mut ph) = (k0, t0, p0);
        let mut step = 0.05;
        while step > 1e-12 {
            let mut moved = false;
            for (dt, dp) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let kk = plane_curvature(&h, t + dt, ph + dp);
                evaluations += 1;
                if kk < k {
                    (k, t, ph) = (kk, t + dt, ph + dp);
                    moved = true;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        inf_k = inf_k.min(k);
    }
    let trace = h[0][0] + h[1][1] + h[2][2];
    BruteForce {
        delta: tau - inf_k,
        tau,
        inf_k,
        mean_sq: (trace / 3.0).powi(2),
        planes: evaluations,
    }
}

/// Max entrywise gap between analytic partials and central differences of the position.
pub fn partials_vs_differences(imm: &dyn Immersion, p: &ChartPoint, step: f64) -> f64 {
    let d = imm.partials(p).expect("partials");
    let pos = |q: &ChartPoint| imm.position(q).expect("position");
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let (a, b) = (pos(&p.shifted(i, step)), pos(&p.shifted(i, -step)));
        for k in 0..4 {
            worst = worst.max(((a[k] - b[k]) / (2.0 * step) - d.first[i][k]).abs());
        }
        for j in 0..3 {
            // ∂ⱼ of the analytic first partial ∂ᵢL
            let (a, b) = (
                imm.partials(&p.shifted(j, step)).unwrap().first[i],
                imm.partials(&p.shifted(j, -step)).unwrap().first[i],
            );
            for k in 0..4 {
                worst = worst.max(((a[k] - b[k]) / (2.0 * step) - d.second[i][j][k]).abs());
            }
        }
    }
    worst
}

/// Deterministic random polynomial with every monomial of total degree 2..=`degree`.
pub fn random_polynomial(rng: &mut impl rand::Rng, degree: u32) -> ideal4_core::catalog::Polynomial {
    use ideal4_core::catalog::{Polynomial, Term};
    let mut terms = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            for k in 0..=degree - i - j {
                if i + j + k >= 2 {
                    terms.push(Term {
                        coeff: rng.gen_range(-1.0..1.0),
                        powers: [i, j, k],
                    });
                }
            }
        }
    }
    Polynomial { terms }
}

pub fn random_point(rng: &mut impl rand::Rng, half: f64) -> ChartPoint {
    ChartPoint::new(
        rng.gen_range(-half..half),
        rng.gen_range(-half..half),
        rng.gen_range(-half..half),
    )
}
