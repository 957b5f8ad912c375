#pragma once

#include <stdexcept>
#include <string>

namespace diomax {

/// Base class for all domain errors. The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DIOMAX_ERROR(Name, Code)                                        \
    class Name : public domain_error {                                  \
    public:                                                             \
        explicit Name(const std::string& what) : domain_error(Code, what) {} \
    }

DIOMAX_ERROR(not_prime, "NotPrime");
DIOMAX_ERROR(reducible_modulus, "ReducibleModulus");
DIOMAX_ERROR(degree_mismatch, "DegreeMismatch");
DIOMAX_ERROR(division_by_zero, "DivisionByZero");
DIOMAX_ERROR(field_mismatch, "FieldMismatch");
DIOMAX_ERROR(even_characteristic, "EvenCharacteristic");
DIOMAX_ERROR(non_integral_coefficient, "NonIntegralCoefficient");
DIOMAX_ERROR(functional_equation_violated, "FunctionalEquationViolated");
DIOMAX_ERROR(odd_degree, "OddDegree");
DIOMAX_ERROR(non_monic, "NonMonic");
DIOMAX_ERROR(not_squarefree, "NotSquarefree");
DIOMAX_ERROR(singular_point_found, "SingularPointFound");
DIOMAX_ERROR(budget_exceeded, "BudgetExceeded");
DIOMAX_ERROR(invalid_model, "InvalidModel");
DIOMAX_ERROR(impossible_counts, "ImpossibleCounts");
DIOMAX_ERROR(not_divisible, "NotDivisible");
DIOMAX_ERROR(not_weil, "NotWeil");
DIOMAX_ERROR(case_requires_square_q, "CaseRequiresSquareQ");

#undef DIOMAX_ERROR

} // namespace diomax
