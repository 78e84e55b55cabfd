from racah_natural.independence import injectivity_certificate
from racah_natural.report import VerificationReport


def run(config):
    report = VerificationReport("injectivity")
    certificate = injectivity_certificate(
        config.caps, cap_limit=config.cap_limit, n_jobs=config.n_jobs, progress=config.progress
    )
    report.record(
        "certificate",
        f"images of the basis elements within caps {tuple(config.caps)} are independent",
        certificate.passed,
        witness=certificate.summary(),
    )
    report.notes.append(f"{certificate.summary()}; finite-degree evidence, not a proof")
    return report
