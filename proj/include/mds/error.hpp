#ifndef MDS_ERROR_HPP
#define MDS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mds
{

/// Malformed input: violated type invariants, bad flags, inconsistent evidence.
class InvalidArgument : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well formed but a criterion's hypotheses do not hold, so it cannot be applied.
class HypothesisFailure : public std::domain_error
{
public:
    explicit HypothesisFailure(const std::string &what, std::vector<std::string> violated = {})
        : std::domain_error(what), violated_(std::move(violated))
    {
    }

    const std::vector<std::string> &violated() const noexcept
    {
        return violated_;
    }

private:
    std::vector<std::string> violated_;
};

class NotRigid : public HypothesisFailure
{
public:
    using HypothesisFailure::HypothesisFailure;
};

class NotPositiveCone : public HypothesisFailure
{
public:
    using HypothesisFailure::HypothesisFailure;
};

class NonIntegralGenus : public HypothesisFailure
{
public:
    using HypothesisFailure::HypothesisFailure;
};

class InvalidEvidence : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

} // namespace mds

#endif
