use crate::scalar::{Amp, Real};

/// Work buffers for classical fourth-order Runge–Kutta on complex vectors.
pub(crate) struct Rk4<T> {
    k1: Vec<Amp<T>>,
    k2: Vec<Amp<T>>,
    k3: Vec<Amp<T>>,
    k4: Vec<Amp<T>>,
    tmp: Vec<Amp<T>>,
}

impl<T: Real> Rk4<T> {
    pub(crate) fn new(dim: usize) -> Self {
        let z = vec![Amp::new(T::zero(), T::zero()); dim];
        Self {
            k1: z.clone(),
            k2: z.clone(),
            k3: z.clone(),
            k4: z.clone(),
            tmp: z,
        }
    }

    /// Advances `y` by `dt` for the autonomous system `y' = rhs(y)`.
    pub(crate) fn step<F>(&mut self, y: &mut [Amp<T>], dt: T, mut rhs: F)
    where
        F: FnMut(&[Amp<T>], &mut [Amp<T>]),
    {
        let half = dt * T::lit(0.5);
        rhs(y, &mut self.k1);
        for ((t, &yi), &k) in self.tmp.iter_mut().zip(y.iter()).zip(&self.k1) {
            *t = yi + k * half;
        }
        rhs(&self.tmp, &mut self.k2);
        for ((t, &yi), &k) in self.tmp.iter_mut().zip(y.iter()).zip(&self.k2) {
            *t = yi + k * half;
        }
        rhs(&self.tmp, &mut self.k3);
        for ((t, &yi), &k) in self.tmp.iter_mut().zip(y.iter()).zip(&self.k3) {
            *t = yi + k * dt;
        }
        rhs(&self.tmp, &mut self.k4);
        let sixth = dt / T::lit(6.0);
        let two = T::lit(2.0);
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = *yi + (self.k1[i] + (self.k2[i] + self.k3[i]) * two + self.k4[i]) * sixth;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_is_fourth_order() {
        // y' = i y, y(0) = 1
        let run = |dt: f64| {
            let mut rk = Rk4::new(1);
            let mut y = vec![Amp::new(1.0, 0.0)];
            let n = (1.0 / dt).round() as usize;
            for _ in 0..n {
                rk.step(&mut y, dt, |y, out| out[0] = y[0] * Amp::new(0.0, 1.0));
            }
            (y[0] - Amp::from_polar(1.0, 1.0)).norm()
        };
        let ratio = run(0.1) / run(0.05);
        assert!((ratio - 16.0).abs() < 1.0, "ratio {ratio}");
    }
}
