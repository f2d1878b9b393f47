#ifndef GINLAB_ERROR_HPP
#define GINLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ginlab {

// Error taxonomy, mirrored by the CLI exit codes:
//   input      -> exit 2 (bad files, bad flags, non-homogeneous generators)
//   resource   -> exit 3 (degree guard tripped)
//   window     -> exit 3 (degree window too small / certificate failed)
//   genericity -> exit 3 (random trials disagreed; re-seed or raise the bound)
//   internal   -> exit 3 (invariant violated; a bug or an impossible request)
enum class errc { input, resource, window, genericity, internal };

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) throw error(code, what);
}

} // namespace ginlab

#endif
