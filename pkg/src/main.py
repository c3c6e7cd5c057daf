"""跳躍有限オートマトン・ツールキットのコマンドラインを起動するエントリーポイント。"""

from __future__ import annotations

import logging
import multiprocessing
import sys
from multiprocessing import queues

from cli.commands import run
from consts.cli_constants import EXIT_USAGE_ERROR
from utils.logging_config import configure_queue_logging, start_log_writer, stop_log_writer

logger = logging.getLogger(__name__)


# 補助処理
def configure_logging(log_record_queue: queues.Queue) -> None:
    """ログの基本設定を行う。

    引数:
        log_record_queue: ログレコードをログ専用プロセスへ送るキュー。

    戻り値:
        なし。

    例外:
        なし。

    補足:
        selftestのワーカープロセスも同じキューへ送るため、ログ行は混在しない。
    """
    configure_queue_logging(log_record_queue)


# メイン処理
def main(argv: list[str] | None = None) -> int:
    """サブコマンドを1つ実行して終了コードを返す。

    引数:
        argv: コマンドライン引数。省略時はsys.argv[1:]。

    戻り値:
        終了コード。0は成功、1は否定の判定、2は入力の誤り、3は上限超過。

    例外:
        なし。Ctrl+Cは捕捉して終了コード2を返す。

    補足:
        実行手順は「ログ専用プロセス起動→サブコマンド実行→ログ停止」で固定する。
    """
    log_record_queue = multiprocessing.Queue()
    log_writer_process = start_log_writer(log_record_queue)

    configure_logging(log_record_queue)
    logger.info("開始: コマンドを実行します。argv=%s", argv if argv is not None else sys.argv[1:])

    try:
        exit_code = run(argv, log_record_queue)
        logger.info("終了: コマンドを実行しました。exit_code=%d", exit_code)
        return exit_code
    except KeyboardInterrupt:
        logger.info("終了: Ctrl+Cを受信したため、コマンドを中断します。")
        return EXIT_USAGE_ERROR
    except Exception:
        logger.exception("異常: コマンドで予期しない例外が発生しました。")
        raise
    finally:
        stop_log_writer(log_record_queue, log_writer_process)


if __name__ == "__main__":
    sys.exit(main())
