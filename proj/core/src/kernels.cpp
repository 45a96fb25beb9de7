#include "rbfcub/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rbfcub {

namespace {

void check_wendland_params(int d, int k) {
  if (d < 1 || d > 3) {
    throw std::invalid_argument("wendland: D must be in {1,2,3}, got " + std::to_string(d));
  }
  if (k < 0 || k > 2) {
    throw std::invalid_argument("wendland: k must be in {0,1,2}, got " + std::to_string(k));
  }
}

double wendland_eval(int d, int k, double r) {
  if (r >= 1.0) {
    return 0.0;
  }
  const double s = 1.0 - r;
  if (d == 1) {
    switch (k) {
      case 0: return s;
      case 1: return s * s * s * (3.0 * r + 1.0);
      case 2: return s * s * s * s * s * (r * (8.0 * r + 5.0) + 1.0);
      default: break;
    }
  } else {
    const double s2 = s * s;
    switch (k) {
      case 0: return s2;
      case 1: return s2 * s2 * (4.0 * r + 1.0);
      case 2: return s2 * s2 * s2 * (r * (35.0 * r + 18.0) + 3.0) / 3.0;
      default: break;
    }
  }
  throw std::invalid_argument("wendland: unsupported (D,k)");
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("kernel token: bad ") + what + " '" + s + "'");
  }
}

}  // namespace

Kernel Kernel::gaussian() { return Kernel{KernelFamily::gaussian, 0, 0}; }

Kernel Kernel::wendland(int d, int k) {
  check_wendland_params(d, k);
  return Kernel{KernelFamily::wendland, d, k};
}

Kernel Kernel::phs_odd(int k) {
  if (k < 1) {
    throw std::invalid_argument("phs_odd: k must be >= 1");
  }
  return Kernel{KernelFamily::phs_odd, 0, k};
}

Kernel Kernel::phs_even_log(int k) {
  if (k < 1) {
    throw std::invalid_argument("phs_even_log: k must be >= 1");
  }
  return Kernel{KernelFamily::phs_even_log, 0, k};
}

int Kernel::exponent() const {
  switch (family) {
    case KernelFamily::phs_odd: return 2 * k - 1;
    case KernelFamily::phs_even_log: return 2 * k;
    default: throw std::logic_error("exponent: not a PHS kernel");
  }
}

int Kernel::order() const {
  switch (family) {
    case KernelFamily::gaussian:
    case KernelFamily::wendland: return 0;
    case KernelFamily::phs_odd: return k;
    case KernelFamily::phs_even_log: return k + 1;
  }
  return 0;
}

double kernel_eval(const Kernel& kernel, double r) {
  if (r < 0.0) {
    throw std::domain_error("kernel_eval: negative radius");
  }
  switch (kernel.family) {
    case KernelFamily::gaussian:
      return std::exp(-r * r);
    case KernelFamily::wendland:
      return wendland_eval(kernel.d, kernel.k, r);
    case KernelFamily::phs_odd:
      return std::pow(r, 2 * kernel.k - 1);
    case KernelFamily::phs_even_log:
      // r^(2k) log r, with the exact limit 0 at r = 0.
      if (r == 0.0) {
        return 0.0;
      }
      return std::pow(r, 2 * kernel.k) * std::log(r);
  }
  return 0.0;
}

double support_radius(const Kernel& kernel, double eps) {
  if (kernel.has_shape() && eps <= 0.0) {
    throw std::invalid_argument("support_radius: eps must be positive");
  }
  if (kernel.compact_support()) {
    return 1.0 / eps;
  }
  return std::numeric_limits<double>::infinity();
}

Kernel parse_kernel(std::string_view token) {
  std::string t(token);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto parts = split(t, ':');
  const std::string& name = parts[0];
  if (name == "gauss" || name == "gaussian") {
    if (parts.size() != 1) {
      throw std::invalid_argument("kernel token: gauss takes no parameters");
    }
    return Kernel::gaussian();
  }
  if (name == "wendland") {
    if (parts.size() != 3) {
      throw std::invalid_argument("kernel token: expected wendland:D:k");
    }
    return Kernel::wendland(parse_int(parts[1], "D"), parse_int(parts[2], "k"));
  }
  if (name == "phs") {
    if (parts.size() != 2) {
      throw std::invalid_argument("kernel token: expected phs:exponent");
    }
    const int e = parse_int(parts[1], "exponent");
    if (e < 1 || e % 2 == 0) {
      throw std::invalid_argument("kernel token: phs exponent must be odd and positive");
    }
    return Kernel::phs_odd((e + 1) / 2);
  }
  if (name == "tps") {
    int e = 2;
    if (parts.size() == 2) {
      e = parse_int(parts[1], "exponent");
    } else if (parts.size() > 2) {
      throw std::invalid_argument("kernel token: expected tps[:exponent]");
    }
    if (e < 2 || e % 2 != 0) {
      throw std::invalid_argument("kernel token: tps exponent must be even and positive");
    }
    return Kernel::phs_even_log(e / 2);
  }
  throw std::invalid_argument("unknown kernel token '" + std::string(token) + "'");
}

std::string kernel_token(const Kernel& kernel) {
  switch (kernel.family) {
    case KernelFamily::gaussian:
      return "gauss";
    case KernelFamily::wendland:
      return "wendland:" + std::to_string(kernel.d) + ":" + std::to_string(kernel.k);
    case KernelFamily::phs_odd:
      return "phs:" + std::to_string(2 * kernel.k - 1);
    case KernelFamily::phs_even_log:
      return "tps:" + std::to_string(2 * kernel.k);
  }
  return {};
}

}  // namespace rbfcub
