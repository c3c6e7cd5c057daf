"""コマンド実行とselftestワーカーのログをキュー経由で1ファイルへ集約する。"""

from __future__ import annotations

import logging
import multiprocessing
from logging.handlers import QueueHandler
from multiprocessing import queues
from pathlib import Path

from consts.logging_constants import (
    LOG_FILE_NAME,
    LOG_OUTPUT_FORMAT,
    LOG_QUEUE_STOP_SIGNAL,
    LOG_WRITER_PROCESS_NAME,
    LOG_WRITER_SHUTDOWN_TIMEOUT_SECONDS,
)
from utils.path_utils import get_logs_directory

__all__ = [
    "LOG_QUEUE_STOP_SIGNAL",
    "configure_queue_logging",
    "run_log_writer",
    "start_log_writer",
    "stop_log_writer",
]


# 補助処理
def _open_log_handler(log_file_path: Path | None) -> logging.Handler:
    path = log_file_path if log_file_path is not None else get_logs_directory() / LOG_FILE_NAME
    handler = logging.FileHandler(path, mode="a", encoding="utf-8")
    handler.setFormatter(logging.Formatter(LOG_OUTPUT_FORMAT))
    return handler


# メイン処理
def configure_queue_logging(log_record_queue: queues.Queue, level: int = logging.INFO) -> None:
    """ルートロガーの出力先をキューだけに置き換える。

    引数:
        log_record_queue: ログ専用プロセスへレコードを送るキュー。
        level: ルートロガーのレベル。

    補足:
        メインプロセスに加え、selftestのProcessPoolExecutorのinitializerとしても呼ばれる。
    """
    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(level)
    root_logger.addHandler(QueueHandler(log_record_queue))


def run_log_writer(log_record_queue: queues.Queue, log_file_path: Path | None = None) -> None:
    """停止シグナルを受け取るまで、キューのログレコードをファイルへ追記する。

    引数:
        log_record_queue: 各プロセスが送るログレコードのキュー。
        log_file_path: 出力先。省略時は`<project_root>/logs/`配下の既定ファイル。

    例外:
        なし。1件の書き込み失敗では停止せず、次のレコードへ進む。
    """
    handler = _open_log_handler(log_file_path)
    writer_logger = logging.getLogger(__name__)
    writer_logger.addHandler(handler)
    writer_logger.propagate = False
    writer_logger.setLevel(logging.INFO)
    written = 0
    try:
        while True:
            log_record = log_record_queue.get()
            if log_record is LOG_QUEUE_STOP_SIGNAL:
                break
            try:
                handler.handle(log_record)
                written += 1
            except Exception:
                writer_logger.exception("異常: ログレコードの書き込みに失敗しました。name=%s", log_record.name)
        writer_logger.info("完了: ログを書き込みました。records=%d", written)
    finally:
        writer_logger.removeHandler(handler)
        handler.close()


def start_log_writer(log_record_queue: queues.Queue) -> multiprocessing.Process:
    """ログ専用プロセスを起動して返す。"""
    process = multiprocessing.Process(target=run_log_writer, args=(log_record_queue,), name=LOG_WRITER_PROCESS_NAME)
    process.start()
    return process


def stop_log_writer(log_record_queue: queues.Queue, process: multiprocessing.Process) -> None:
    """停止シグナルを送り、ログ専用プロセスの終了を待つ。

    補足:
        待機時間を過ぎても終了しない場合は強制終了する。未書き込みのレコードは失われる。
    """
    log_record_queue.put(LOG_QUEUE_STOP_SIGNAL)
    process.join(LOG_WRITER_SHUTDOWN_TIMEOUT_SECONDS)
    if process.is_alive():
        process.terminate()
        process.join()
