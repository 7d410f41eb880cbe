#pragma once

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Run an executable with arguments, capturing stdout/stderr separately.
/// Reads both pipes concurrently so neither side can deadlock on a full
/// buffer. No shell is involved, so arguments need no quoting.
inline RunResult run_process(const std::string& exe, const std::vector<std::string>& args) {
    int out_pipe[2];
    int err_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        throw std::runtime_error("pipe() failed");
    }
    const pid_t pid = fork();
    if (pid < 0) {
        throw std::runtime_error("fork() failed");
    }
    if (pid == 0) {
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(exe.c_str()));
        for (const auto& a : args) {
            argv.push_back(const_cast<char*>(a.c_str()));
        }
        argv.push_back(nullptr);
        execv(exe.c_str(), argv.data());
        _exit(127);
    }
    close(out_pipe[1]);
    close(err_pipe[1]);

    RunResult result;
    struct Stream {
        int fd;
        std::string* sink;
        bool open = true;
    };
    Stream streams[2] = {{out_pipe[0], &result.out}, {err_pipe[0], &result.err}};
    char buf[4096];
    while (streams[0].open || streams[1].open) {
        pollfd fds[2];
        nfds_t count = 0;
        for (const Stream& s : streams) {
            if (s.open) {
                fds[count++] = {s.fd, POLLIN, 0};
            }
        }
        if (poll(fds, count, -1) < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw std::runtime_error("poll() failed");
        }
        for (nfds_t k = 0; k < count; ++k) {
            if (!(fds[k].revents & (POLLIN | POLLHUP | POLLERR))) {
                continue;
            }
            for (Stream& s : streams) {
                if (s.open && s.fd == fds[k].fd) {
                    const ssize_t got = read(s.fd, buf, sizeof(buf));
                    if (got > 0) {
                        s.sink->append(buf, static_cast<std::size_t>(got));
                    } else if (got == 0 || (got < 0 && errno != EINTR)) {
                        close(s.fd);
                        s.open = false;
                    }
                }
            }
        }
    }

    int status = 0;
    if (waitpid(pid, &status, 0) < 0) {
        throw std::runtime_error("waitpid() failed");
    }
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = -WTERMSIG(status);  // negative: killed by signal
    }
    return result;
}

}  // namespace testsupport
