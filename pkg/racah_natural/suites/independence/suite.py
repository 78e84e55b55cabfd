from racah_natural.independence import (
    verify_independence_substitution,
    verify_leading_monomial_law,
    verify_theta_independence,
)


def run(config):
    report = verify_leading_monomial_law(max_exp=config.max_exp, seed=config.seed)
    report.extend(verify_independence_substitution(), prefix="substitution")
    report.extend(verify_theta_independence(config.max_total_degree), prefix="rank")
    return report
