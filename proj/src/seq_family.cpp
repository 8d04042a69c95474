#include "seq_family.hpp"

#include <stdexcept>
#include <utility>

namespace rbellkit {

SequenceFamily SequenceFamily::ones() { return {Kind::Ones, Rational(0)}; }

SequenceFamily SequenceFamily::exponential(const Rational& m) {
  if (m == 0) throw std::invalid_argument("exponential family: m must be nonzero");
  return {Kind::Exponential, m};
}

SequenceFamily SequenceFamily::log_inverse(const Rational& m) {
  if (m == 0) throw std::invalid_argument("log-inverse family: m must be nonzero");
  return {Kind::LogInverse, m};
}

SequenceFamily SequenceFamily::power_binomial(const Rational& beta) {
  return {Kind::PowerBinomial, beta};
}

SequenceFamily SequenceFamily::power_binomial_shifted(const Rational& alpha) {
  return {Kind::PowerBinomialShifted, alpha};
}

SequenceFamily SequenceFamily::falling_factorial_seq(const Rational& beta) {
  return {Kind::FallingFactorial, beta};
}

SequenceFamily SequenceFamily::rising_factorial_seq(const Rational& beta) {
  return {Kind::RisingFactorial, beta};
}

SequenceFamily SequenceFamily::signed_factorial() { return {Kind::SignedFactorial, Rational(0)}; }

SequenceFamily SequenceFamily::explicit_list(std::vector<Rational> entries) {
  SequenceFamily f{Kind::Explicit, Rational(0)};
  f.list_ = std::move(entries);
  return f;
}

SequenceFamily SequenceFamily::from_series(Series s, bool egf) {
  SequenceFamily f{Kind::FromSeries, Rational(0)};
  f.series_ = std::move(s);
  f.egf_ = egf;
  return f;
}

SequenceFamily SequenceFamily::shifted(SequenceFamily inner, Rational a0) {
  SequenceFamily f{Kind::Shifted, std::move(a0)};
  f.inner_ = std::make_shared<const SequenceFamily>(std::move(inner));
  return f;
}

Rational SequenceFamily::entry(int j) const {
  if (j < 1) throw std::out_of_range("family entries start at index 1");
  const unsigned long uj = static_cast<unsigned long>(j);
  switch (kind_) {
    case Kind::Ones:
      return Rational(1);
    case Kind::Exponential:
      return pow_int(param_, j - 1);
    case Kind::LogInverse: {
      Rational v = Rational(factorial(uj - 1)) * pow_int(param_, j - 1);
      return (j % 2 == 0) ? Rational(-v) : v;
    }
    case Kind::PowerBinomial: {
      Rational v = falling_factorial(param_, uj);
      return (j % 2 == 0) ? v : Rational(-v);
    }
    case Kind::PowerBinomialShifted: {
      if (j == 1) return Rational(1);
      Rational v = falling_factorial(param_, uj - 1);
      return (j % 2 == 0) ? Rational(-v) : v;
    }
    case Kind::FallingFactorial:
      return falling_factorial(param_, uj);
    case Kind::RisingFactorial:
      return rising_factorial(param_, uj);
    case Kind::SignedFactorial: {
      Rational v(factorial(uj - 1));
      return (j % 2 == 0) ? Rational(-v) : v;
    }
    case Kind::Explicit:
      if (uj > list_.size())
        throw std::invalid_argument("explicit family has only " +
                                    std::to_string(list_.size()) + " entries, need " +
                                    std::to_string(j));
      return list_[uj - 1];
    case Kind::FromSeries:
      if (j > series_->order())
        throw std::invalid_argument("series-backed family stops at order " +
                                    std::to_string(series_->order()) + ", need " +
                                    std::to_string(j));
      return egf_ ? Rational(Rational(factorial(uj)) * series_->coeff(j)) : series_->coeff(j);
    case Kind::Shifted:
      return j == 1 ? param_ : inner_->entry(j - 1);
  }
  throw std::logic_error("unreachable family kind");
}

std::vector<Rational> SequenceFamily::materialize(int n) const {
  if (n < 0) throw std::invalid_argument("cannot materialize a negative prefix");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v.push_back(entry(j));
  return v;
}

Series SequenceFamily::to_series(int order, const Rational& constant) const {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = constant;
  for (int j = 1; j <= order; ++j)
    c[static_cast<std::size_t>(j)] = entry(j) / Rational(factorial(static_cast<unsigned long>(j)));
  return Series(std::move(c));
}

Series SequenceFamily::b_series(int order) const {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j)
    c[static_cast<std::size_t>(j)] = entry(j + 1) / Rational(factorial(static_cast<unsigned long>(j)));
  return Series(std::move(c));
}

namespace {

Rational parse_single_param(const std::string& kind, const std::string& args,
                            const std::string& name) {
  const std::string prefix = name + "=";
  if (args.compare(0, prefix.size(), prefix) != 0)
    throw std::invalid_argument("family '" + kind + "' expects " + prefix + "<rational>");
  return parse_rational(args.substr(prefix.size()));
}

std::vector<Rational> parse_list(const std::string& args) {
  if (args.size() < 2 || args.front() != '[' || args.back() != ']')
    throw std::invalid_argument("explicit family expects [r1,r2,...]");
  std::vector<Rational> out;
  std::string body = args.substr(1, args.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SequenceFamily SequenceFamily::parse(const std::string& text) {
  const std::string shift_prefix = "shifted:";
  if (text.compare(0, shift_prefix.size(), shift_prefix) == 0)
    return shifted(parse(text.substr(shift_prefix.size())), Rational(1));

  std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  auto no_args = [&]() {
    if (!args.empty()) throw std::invalid_argument("family '" + kind + "' takes no parameters");
  };

  if (kind == "ones" || kind == "exp") {
    no_args();
    return ones();
  }
  if (kind == "exponential") return exponential(parse_single_param(kind, args, "m"));
  if (kind == "log-inverse") return log_inverse(parse_single_param(kind, args, "m"));
  if (kind == "power-binomial") return power_binomial(parse_single_param(kind, args, "beta"));
  if (kind == "power-binomial-shifted")
    return power_binomial_shifted(parse_single_param(kind, args, "alpha"));
  if (kind == "falling-factorial") return falling_factorial_seq(parse_single_param(kind, args, "beta"));
  if (kind == "rising-factorial") return rising_factorial_seq(parse_single_param(kind, args, "beta"));
  if (kind == "signed-factorial") {
    no_args();
    return signed_factorial();
  }
  if (kind == "explicit") return explicit_list(parse_list(args));
  throw std::invalid_argument("unknown family kind '" + kind + "'");
}

std::string SequenceFamily::describe() const {
  switch (kind_) {
    case Kind::Ones:
      return "ones";
    case Kind::Exponential:
      return "exponential:m=" + rbellkit::to_string(param_);
    case Kind::LogInverse:
      return "log-inverse:m=" + rbellkit::to_string(param_);
    case Kind::PowerBinomial:
      return "power-binomial:beta=" + rbellkit::to_string(param_);
    case Kind::PowerBinomialShifted:
      return "power-binomial-shifted:alpha=" + rbellkit::to_string(param_);
    case Kind::FallingFactorial:
      return "falling-factorial:beta=" + rbellkit::to_string(param_);
    case Kind::RisingFactorial:
      return "rising-factorial:beta=" + rbellkit::to_string(param_);
    case Kind::SignedFactorial:
      return "signed-factorial";
    case Kind::Explicit: {
      std::string out = "explicit:[";
      for (std::size_t i = 0; i < list_.size(); ++i) {
        if (i) out += ",";
        out += rbellkit::to_string(list_[i]);
      }
      return out + "]";
    }
    case Kind::FromSeries:
      return std::string("from-series(") + (egf_ ? "egf" : "ogf") +
             ";order=" + std::to_string(series_->order()) + ")";
    case Kind::Shifted:
      if (param_ == 1) return "shifted:" + inner_->describe();
      return "shifted[a0=" + rbellkit::to_string(param_) + "]:" + inner_->describe();
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace rbellkit
