from racah_natural.natural import verify_normal_form_oracle
from racah_natural.racah import verify_relations


def run(config):
    report = verify_relations()
    oracle = verify_normal_form_oracle(
        n=config.n_samples,
        max_depth=config.max_depth,
        max_weight=config.max_weight,
        seed=config.seed,
        n_jobs=config.n_jobs,
        progress=config.progress,
    )
    return report.extend(oracle, prefix="oracle")
