//! Nelder–Mead descent with dimension-adaptive coefficients.

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexSettings<T> {
    /// Edge length of the initial right-angled simplex.
    pub initial_step: T,
    /// Stop once every vertex is this close to the best one (max-norm)...
    pub xtol: T,
    /// ...and the objective spread across vertices is below this, or the
    /// simplex has collapsed to machine resolution.
    pub ftol: T,
    pub max_evals: usize,
}

impl<T: Real> Default for SimplexSettings<T> {
    fn default() -> Self {
        Self {
            initial_step: T::lit(0.02),
            xtol: T::lit(1e-10),
            ftol: T::lit(1e-16),
            max_evals: 4000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexOutcome<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evals: usize,
    pub converged: bool,
}

fn nan_last<T: Real>(v: T) -> T {
    if v.is_nan() {
        T::infinity()
    } else {
        v
    }
}

pub fn nelder_mead<T: Real, E>(
    mut f: impl FnMut(&[T]) -> Result<T, E>,
    x0: &[T],
    settings: &SimplexSettings<T>,
) -> Result<SimplexOutcome<T>, E> {
    let d = x0.len();
    let dn = T::from_usize(d.max(1)).unwrap();
    let reflect = T::one();
    let expand = T::one() + T::lit(2.0) / dn;
    let contract = T::lit(0.75) - T::lit(0.5) / dn;
    let shrink = T::one() - T::one() / dn;

    let mut evals = 0;
    let mut eval = |x: &[T], evals: &mut usize| -> Result<T, E> {
        *evals += 1;
        Ok(nan_last(f(x)?))
    };

    let mut simplex: Vec<Vec<T>> = vec![x0.to_vec()];
    for j in 0..d {
        let mut v = x0.to_vec();
        v[j] = v[j] + settings.initial_step;
        simplex.push(v);
    }
    let mut values = Vec::with_capacity(d + 1);
    for v in &simplex {
        values.push(eval(v, &mut evals)?);
    }

    let mut converged = false;
    while evals < settings.max_evals {
        // stable sort keeps vertex order deterministic among ties
        let mut order: Vec<usize> = (0..=d).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let spread = values[d] - values[0];
        let size = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(&simplex[0]).map(|(a, b)| (*a - *b).abs()))
            .fold(T::zero(), T::max);
        // at machine resolution no vertex can move, whatever the spread
        let scale = simplex[0].iter().fold(T::one(), |m, v| m.max(v.abs()));
        let floor = T::epsilon() * T::lit(4.0) * scale;
        if size <= settings.xtol && (spread <= settings.ftol || size <= floor) {
            converged = true;
            break;
        }

        let mut centroid = vec![T::zero(); d];
        for v in &simplex[..d] {
            for (c, &x) in centroid.iter_mut().zip(v) {
                *c = *c + x / dn;
            }
        }
        let along = |t: T| -> Vec<T> {
            centroid
                .iter()
                .zip(&simplex[d])
                .map(|(&c, &w)| c + t * (c - w))
                .collect()
        };

        let xr = along(reflect);
        let fr = eval(&xr, &mut evals)?;
        if fr < values[0] {
            let xe = along(reflect * expand);
            let fe = eval(&xe, &mut evals)?;
            if fe < fr {
                simplex[d] = xe;
                values[d] = fe;
            } else {
                simplex[d] = xr;
                values[d] = fr;
            }
            continue;
        }
        if fr < values[d - 1] {
            simplex[d] = xr;
            values[d] = fr;
            continue;
        }
        let (xc, fc, accept) = if fr < values[d] {
            let xc = along(reflect * contract);
            let fc = eval(&xc, &mut evals)?;
            let ok = fc <= fr;
            (xc, fc, ok)
        } else {
            let xc = along(-contract);
            let fc = eval(&xc, &mut evals)?;
            let ok = fc < values[d];
            (xc, fc, ok)
        };
        if accept {
            simplex[d] = xc;
            values[d] = fc;
            continue;
        }
        let best = simplex[0].clone();
        for i in 1..=d {
            let v: Vec<T> = best
                .iter()
                .zip(&simplex[i])
                .map(|(&b, &x)| b + shrink * (x - b))
                .collect();
            values[i] = eval(&v, &mut evals)?;
            simplex[i] = v;
        }
    }

    let best = (0..=d)
        .min_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)))
        .unwrap();
    Ok(SimplexOutcome {
        x: simplex[best].clone(),
        value: values[best],
        evals,
        converged,
    })
}
