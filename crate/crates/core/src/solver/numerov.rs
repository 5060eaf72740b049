//! Fourth-order Numerov integration of u'' = q(x) u on a uniform grid,
//! plus the composite Simpson rule used for normalization and matrix
//! elements.

/// Rescale threshold for the full-range shooting pass; growth through a
/// long classically forbidden region would otherwise overflow.
const RENORM_LIMIT: f64 = 1e120;

#[inline]
fn numerov_step(t_prev: f64, t_cur: f64, t_next: f64, u_prev: f64, u_cur: f64) -> f64 {
    (2.0 * u_cur * (1.0 + 5.0 * t_cur) - u_prev * (1.0 - t_prev)) / (1.0 - t_next)
}

/// Integrate forward from `start` to the end of `q`, counting interior
/// sign changes. Only the node count survives; amplitudes are rescaled
/// whenever they grow past [`RENORM_LIMIT`].
pub fn shoot_count_nodes(q: &[f64], h: f64, start: usize, u0: f64, u1: f64) -> usize {
    let c = h * h / 12.0;
    let mut nodes = 0;
    let mut u_prev = u0;
    let mut u_cur = u1;
    let mut sign = if u_cur > 0.0 {
        1
    } else if u_cur < 0.0 {
        -1
    } else {
        0
    };
    for i in start + 1..q.len() - 1 {
        let u_next = numerov_step(c * q[i - 1], c * q[i], c * q[i + 1], u_prev, u_cur);
        let s = if u_next > 0.0 {
            1
        } else if u_next < 0.0 {
            -1
        } else {
            0
        };
        if s != 0 {
            if sign != 0 && s != sign {
                nodes += 1;
            }
            sign = s;
        }
        u_prev = u_cur;
        u_cur = u_next;
        if u_cur.abs() > RENORM_LIMIT {
            u_prev /= RENORM_LIMIT;
            u_cur /= RENORM_LIMIT;
        }
    }
    nodes
}

/// Integrate forward, filling `u[start..=stop]`; `u[start]` and
/// `u[start+1]` must be preset.
pub fn integrate_forward(q: &[f64], h: f64, start: usize, stop: usize, u: &mut [f64]) {
    let c = h * h / 12.0;
    for i in start + 1..stop {
        u[i + 1] = numerov_step(c * q[i - 1], c * q[i], c * q[i + 1], u[i - 1], u[i]);
    }
}

/// Integrate backward, filling `u[stop..=start]`; `u[start]` and
/// `u[start-1]` must be preset (start is the right edge).
pub fn integrate_backward(q: &[f64], h: f64, start: usize, stop: usize, u: &mut [f64]) {
    let c = h * h / 12.0;
    let mut i = start - 1;
    while i > stop {
        u[i - 1] = numerov_step(c * q[i + 1], c * q[i], c * q[i - 1], u[i + 1], u[i]);
        i -= 1;
    }
}

/// Composite Simpson rule on a uniform grid; a trapezoid panel picks up
/// the last interval when the interval count is odd.
pub fn simpson(y: &[f64], h: f64) -> f64 {
    let n = y.len();
    if n < 2 {
        return 0.0;
    }
    let intervals = n - 1;
    let even_intervals = if intervals % 2 == 0 {
        intervals
    } else {
        intervals - 1
    };
    let mut sum = 0.0;
    let mut i = 0;
    while i + 2 <= even_intervals {
        sum += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
        i += 2;
    }
    if intervals % 2 == 1 {
        sum += 0.5 * h * (y[n - 2] + y[n - 1]);
    }
    sum
}
