#include <sscodes/errors.hpp>
#include <sscodes/io.hpp>

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace sscodes
{
    auto read_file(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw IoError("cannot open " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (in.bad())
            throw IoError("error reading " + path.string());
        return buffer.str();
    }

    auto write_file_atomic(const std::filesystem::path & path, std::string_view content) -> void
    {
        auto tmp = path;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
            if (! out)
                throw IoError("cannot create " + tmp.string());
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.flush();
            if (! out)
                throw IoError("error writing " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw IoError("cannot move output into place at " + path.string());
        }
    }
}
