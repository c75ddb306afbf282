//! Fixed-size vector and matrix helpers for 3- and 4-dimensional data.
//!
//! Everything here works on plain arrays; matrices are row-major `[[f64; N]; N]`.

use std::f64::consts::PI;

pub type Vec3 = [f64; 3];
pub type Vec4 = [f64; 4];
pub type Mat3 = [[f64; 3]; 3];
pub type Mat4 = [[f64; 4]; 4];

pub const IDENTITY3: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

pub fn dot4(a: &Vec4, b: &Vec4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

pub fn dot3(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm4(a: &Vec4) -> f64 {
    dot4(a, a).sqrt()
}

pub fn norm3(a: &Vec3) -> f64 {
    dot3(a, a).sqrt()
}

pub fn scale4(a: &Vec4, s: f64) -> Vec4 {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat3_vec(a: &Mat3, v: &Vec3) -> Vec3 {
    [dot3(&a[0], v), dot3(&a[1], v), dot3(&a[2], v)]
}

pub fn transpose3(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn det3(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Inverse by the adjugate; `None` when the determinant is exactly zero or not finite.
pub fn inverse3(a: &Mat3) -> Option<Mat3> {
    let det = det3(a);
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    let inv_det = 1.0 / det;
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    Some([
        [c(1, 2, 1, 2) * inv_det, -c(0, 2, 1, 2) * inv_det, c(0, 1, 1, 2) * inv_det],
        [-c(1, 2, 0, 2) * inv_det, c(0, 2, 0, 2) * inv_det, -c(0, 1, 0, 2) * inv_det],
        [c(1, 2, 0, 1) * inv_det, -c(0, 2, 0, 1) * inv_det, c(0, 1, 0, 1) * inv_det],
    ])
}

/// Determinant of the 4×4 matrix whose columns are `cols`.
pub fn det4_cols(cols: &[Vec4; 4]) -> f64 {
    let mut total = 0.0;
    // Laplace expansion along the last column.
    for row in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for (r, i) in (0..4).filter(|&i| i != row).enumerate() {
            for (j, col) in cols.iter().take(3).enumerate() {
                minor[r][j] = col[i];
            }
        }
        let sign = if (row + 3) % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * cols[3][row] * det3(&minor);
    }
    total
}

/// Generalized cross product of three vectors in 4-space.
///
/// Component `i` is `det(a, b, c, eᵢ)`, so the result is orthogonal to all
/// three inputs and `det(a, b, c, result) = |result|² ≥ 0`.
pub fn cross4(a: &Vec4, b: &Vec4, c: &Vec4) -> Vec4 {
    let mut out = [0.0; 4];
    for (i, o) in out.iter_mut().enumerate() {
        let mut e = [0.0; 4];
        e[i] = 1.0;
        *o = det4_cols(&[*a, *b, *c, e]);
    }
    out
}

/// Lower-triangular Cholesky factor `L` with `a = L Lᵀ`; `None` unless `a` is positive definite.
pub fn cholesky3(a: &Mat3) -> Option<Mat3> {
    let mut l = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = a[i][i] - s;
                if !(d > 0.0) {
                    return None;
                }
                l[i][j] = d.sqrt();
            } else {
                l[i][j] = (a[i][j] - s) / l[j][j];
            }
        }
    }
    Some(l)
}

/// Inverse of a lower-triangular matrix.
pub fn lower_inverse3(l: &Mat3) -> Mat3 {
    let mut inv = [[0.0; 3]; 3];
    for i in 0..3 {
        inv[i][i] = 1.0 / l[i][i];
        for j in 0..i {
            let s: f64 = (j..i).map(|k| l[i][k] * inv[k][j]).sum();
            inv[i][j] = -s / l[i][i];
        }
    }
    inv
}

/// `m ↦ T m Tᵀ`.
pub fn congruence3(t: &Mat3, m: &Mat3) -> Mat3 {
    mat3_mul(&mat3_mul(t, m), &transpose3(t))
}

pub fn symmetrize3(m: &Mat3) -> Mat3 {
    let mut out = *m;
    for i in 0..3 {
        for j in 0..i {
            let avg = 0.5 * (m[i][j] + m[j][i]);
            out[i][j] = avg;
            out[j][i] = avg;
        }
    }
    out
}

/// Relative gap below which the trigonometric eigen formula hands over to Jacobi rotations.
const NEAR_DEGENERATE: f64 = 1e-6;

/// Eigenvalues of a symmetric 3×3 matrix in ascending order.
///
/// Uses the closed-form trigonometric solution of the characteristic cubic.
/// When two eigenvalues nearly coincide (`acos` argument close to ±1) the
/// cubic is ill-conditioned and cyclic Jacobi rotations are used instead.
pub fn sym_eigenvalues3(a: &Mat3) -> Vec3 {
    let a = symmetrize3(a);
    let off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if off == 0.0 {
        return sorted3([a[0][0], a[1][1], a[2][2]]);
    }
    let q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    let p2 = (a[0][0] - q).powi(2) + (a[1][1] - q).powi(2) + (a[2][2] - q).powi(2) + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return [q; 3];
    }
    let mut b = a;
    for (i, row) in b.iter_mut().enumerate() {
        row[i] -= q;
        for x in row.iter_mut() {
            *x /= p;
        }
    }
    let r = det3(&b) / 2.0;
    if 1.0 - r.abs() < NEAR_DEGENERATE {
        return jacobi_eigenvalues3(&a);
    }
    let phi = r.clamp(-1.0, 1.0).acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    sorted3([lo, mid, hi])
}

/// Cyclic Jacobi eigenvalue iteration for a symmetric 3×3 matrix.
pub fn jacobi_eigenvalues3(a: &Mat3) -> Vec3 {
    let mut m = symmetrize3(a);
    let scale = m.iter().flatten().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 {
        return [0.0; 3];
    }
    for _sweep in 0..50 {
        let off = m[0][1].abs() + m[0][2].abs() + m[1][2].abs();
        if off <= f64::EPSILON * 1e-3 * scale {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if m[p][q] == 0.0 {
                continue;
            }
            let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let mut rot = IDENTITY3;
            rot[p][p] = c;
            rot[q][q] = c;
            rot[p][q] = s;
            rot[q][p] = -s;
            m = mat3_mul(&mat3_mul(&transpose3(&rot), &m), &rot);
            m[p][q] = 0.0;
            m[q][p] = 0.0;
        }
    }
    sorted3([m[0][0], m[1][1], m[2][2]])
}

pub fn sorted3(mut v: Vec3) -> Vec3 {
    v.sort_by(f64::total_cmp);
    v
}
