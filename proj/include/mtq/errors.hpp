#pragma once

#include <stdexcept>
#include <string>

namespace mtq {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MTQ_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

MTQ_DEFINE_ERROR(ZeroForm);
MTQ_DEFINE_ERROR(DegenerateElimination);
MTQ_DEFINE_ERROR(NotDistinct);
MTQ_DEFINE_ERROR(SingularTransform);
MTQ_DEFINE_ERROR(InvalidFamily);
MTQ_DEFINE_ERROR(StarFails);
MTQ_DEFINE_ERROR(NoAdmissibleTransform);
MTQ_DEFINE_ERROR(Indeterminate);
MTQ_DEFINE_ERROR(NotDoubleCover);
MTQ_DEFINE_ERROR(MismatchedA);
MTQ_DEFINE_ERROR(NonRealInput);
MTQ_DEFINE_ERROR(InvalidConic);
MTQ_DEFINE_ERROR(ConicInsideSurface);
MTQ_DEFINE_ERROR(NoConvergence);
MTQ_DEFINE_ERROR(DegeneratePlane);
MTQ_DEFINE_ERROR(OrbitTangentPlane);
MTQ_DEFINE_ERROR(SymmetricConic);
MTQ_DEFINE_ERROR(NotAnticanonicalShape);
MTQ_DEFINE_ERROR(CurvesCoincide);
MTQ_DEFINE_ERROR(NotTouching);
MTQ_DEFINE_ERROR(NoNode);
MTQ_DEFINE_ERROR(ParseError);

#undef MTQ_DEFINE_ERROR

} // namespace mtq
