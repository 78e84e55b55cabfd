from racah_natural.tensor import verify_basis_faithfulness, verify_structural_laws


def run(config):
    report = verify_structural_laws()
    report.extend(verify_basis_faithfulness(config.basis_max_exponent), prefix="basis")
    return report
