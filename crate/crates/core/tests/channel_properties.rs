use proptest::prelude::*;

use rateregion_core::{normalize_two_user, rate_vector, sinr, ChannelInstance, PowerVector};

fn channel_strategy(n: usize) -> impl Strategy<Value = ChannelInstance> {
    (
        prop::collection::vec(prop::collection::vec(-20.0f64..20.0, n), n),
        -10.0f64..10.0,
        prop::sample::select(vec![0.1, 1.0, 10.0]),
    )
        .prop_map(|(rows_db, noise_db, p_max)| {
            let rows = rows_db
                .into_iter()
                .map(|r| r.into_iter().map(|g| 10f64.powf(g / 10.0)).collect())
                .collect();
            ChannelInstance::new(rows, 10f64.powf(noise_db / 10.0), p_max).unwrap()
        })
}

fn powers(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..=1.0, n)
}

fn scaled(ch: &ChannelInstance, u: &[f64]) -> PowerVector {
    PowerVector::new(u.iter().map(|x| x * ch.p_max()).collect())
}

proptest! {
    #[test]
    fn own_power_helps_and_others_hurt(
        ch in (2usize..=4).prop_flat_map(channel_strategy),
        seed in powers(4),
        i in 0usize..4,
        j in 0usize..4,
        bump in 0.01f64..1.0,
    ) {
        let n = ch.n();
        let (i, j) = (i % n, j % n);
        let p = scaled(&ch, &seed[..n]);
        let base = rate_vector(&ch, &p).unwrap();
        let mut raised = p.as_slice().to_vec();
        raised[j] = (raised[j] + bump * ch.p_max()).min(ch.p_max());
        if raised[j] == p[j] {
            return Ok(());
        }
        let after = rate_vector(&ch, &PowerVector::new(raised)).unwrap();
        for k in 0..n {
            if k == j {
                prop_assert!(after[k] > base[k]);
            } else {
                prop_assert!(after[k] <= base[k]);
            }
        }
        prop_assert!(sinr(&ch, &p, i).unwrap() >= 0.0);
    }

    #[test]
    fn rates_are_scale_invariant(
        ch in (2usize..=4).prop_flat_map(channel_strategy),
        u in powers(4),
        scale_db in -30.0f64..30.0,
    ) {
        let n = ch.n();
        let s = 10f64.powf(scale_db / 10.0);
        let rows: Vec<Vec<f64>> = ch.gain_rows().into_iter()
            .map(|r| r.into_iter().map(|g| g * s).collect())
            .collect();
        let other = ChannelInstance::new(rows, ch.noise_var() * s, ch.p_max()).unwrap();
        let p = scaled(&ch, &u[..n]);
        let a = rate_vector(&ch, &p).unwrap();
        let b = rate_vector(&other, &p).unwrap();
        for k in 0..n {
            prop_assert!((a[k] - b[k]).abs() <= 1e-12 * a[k].max(1.0));
        }
    }

    #[test]
    fn normalized_parameters_reproduce_rates(
        ch in channel_strategy(2),
        u in powers(2),
    ) {
        let params = normalize_two_user(&ch).unwrap();
        let p = scaled(&ch, &u);
        let r = rate_vector(&ch, &p).unwrap();
        let (r1, r2) = params.rates(p[0], p[1]);
        prop_assert!((r[0] - r1).abs() <= 1e-12 * r1.max(1.0));
        prop_assert!((r[1] - r2).abs() <= 1e-12 * r2.max(1.0));
    }

    #[test]
    fn silent_transmitter_gets_zero_rate(
        ch in (2usize..=4).prop_flat_map(channel_strategy),
        u in powers(4),
        i in 0usize..4,
    ) {
        let n = ch.n();
        let mut p = scaled(&ch, &u[..n]).into_vec();
        p[i % n] = 0.0;
        let r = rate_vector(&ch, &PowerVector::new(p)).unwrap();
        prop_assert_eq!(r[i % n], 0.0);
    }
}
