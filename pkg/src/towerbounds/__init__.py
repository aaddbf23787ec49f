"""Exact verification of tower-infinitude certificates and Brauer-Siegel ratio bounds.

The package verifies, in exact integer and rational arithmetic, that certain
quadratic extensions K/k of sextic fields carry an infinite tamely ramified
2-tower (a Golod-Shafarevich generator-rank certificate plus a tame
augmentation step), and evaluates the resulting interval bounds on the
Brauer-Siegel ratio of the tower, including an exact rational linear program
for the upper bound under the GRH basic inequality.

Modules:
    exact_arith         integer polynomial kernels (resultants, Sturm chains,
                        factorization degree data over prime fields)
    number_field        monogenic orders Z[xi], element identities, relative
                        and absolute discriminants, place tallies
    tower_certificates  generator-rank bounds, thresholds, tame augmentation,
                        genus-limit ratio and phi intervals
    bs_bounds           Brauer-Siegel formula, basic inequality, exact LP
                        upper bound, residue-formula utilities, table emitter
    documents, report, pipeline, cli
                        input parsing, machine-readable reports, the
                        verification pipelines and the command-line interface
"""

__version__ = "1.0.0"
